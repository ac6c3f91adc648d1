// Knot signature via the Gordon-Litherland form on a checkerboard surface:
// sigma(K) = sig(Goeritz form of the white surface) - mu(correction).
// Computed for both checkerboard colorings and cross-checked.
#ifndef LAGFILL_SIGNATURE_HPP
#define LAGFILL_SIGNATURE_HPP

#include <numeric>
#include <vector>

#include "lagfill/diagram.hpp"

namespace lagfill {

namespace detail {

struct Frac {
    long long num = 0, den = 1;
    Frac() = default;
    Frac(long long n) : num(n), den(1) {}
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }
    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }
    Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
    Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
    Frac operator*(const Frac& o) const { return Frac(num * o.num, den * o.den); }
    Frac operator/(const Frac& o) const { return Frac(num * o.den, den * o.num); }
    bool zero() const { return num == 0; }
    int sgn() const { return num > 0 ? 1 : (num < 0 ? -1 : 0); }
};

// signature of a symmetric rational matrix by congruence diagonalization
inline int sym_signature(std::vector<std::vector<Frac>> m) {
    int n = static_cast<int>(m.size());
    int sig = 0;
    for (int i = 0; i < n; ++i) {
        if (m[i][i].zero()) {
            int piv = -1;
            for (int j = i + 1; j < n; ++j)
                if (!m[j][j].zero()) {
                    piv = j;
                    break;
                }
            if (piv >= 0) {
                std::swap(m[i], m[piv]);
                for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][piv]);
            } else {
                int off = -1;
                for (int j = i + 1; j < n; ++j)
                    if (!m[i][j].zero()) {
                        off = j;
                        break;
                    }
                if (off < 0) continue; // zero row: contributes nothing
                for (int c = 0; c < n; ++c) m[i][c] = m[i][c] + m[off][c];
                for (int r = 0; r < n; ++r) m[r][i] = m[r][i] + m[r][off];
            }
        }
        if (m[i][i].zero()) continue;
        sig += m[i][i].sgn();
        for (int r = i + 1; r < n; ++r) {
            if (m[r][i].zero()) continue;
            Frac f = m[r][i] / m[i][i];
            for (int c = i; c < n; ++c) m[r][c] = m[r][c] - f * m[i][c];
        }
        for (int c = i + 1; c < n; ++c) {
            if (m[i][c].zero()) continue;
            Frac f = m[i][c] / m[i][i];
            for (int cc = i; cc < n; ++cc) m[cc][c] = m[cc][c] - f * m[cc][i]; // symmetric col op
        }
    }
    return sig;
}

} // namespace detail

inline int signature(const OrientedDiagram& d) {
    if (!d.is_knot())
        throw Error(ErrorKind::Unsupported, "signature requires a one-component diagram");
    if (d.n == 0) return 0;

    // checkerboard-color the faces
    int nf = static_cast<int>(d.faces.size());
    std::vector<int> color(nf, -1);
    std::vector<int> stack{0};
    color[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int e : d.faces[f]) {
            // faces across dart e: corners (k, s-1) and (k, s)
            int k = e / 4, s = e % 4;
            int f1 = d.face_of_corner(k, (s + 3) % 4);
            int f2 = d.face_of_corner(k, s);
            int other = (f1 == f) ? f2 : f1;
            if (color[other] < 0) {
                color[other] = 1 - color[f];
                stack.push_back(other);
            } else if (color[other] == color[f]) {
                throw Error(ErrorKind::Validation, "diagram faces are not checkerboard-colorable");
            }
        }
    }

    auto sigma_for = [&](int white) {
        // white faces indexed
        std::vector<int> widx(nf, -1);
        int nw = 0;
        for (int f = 0; f < nf; ++f)
            if (color[f] == white) widx[f] = nw++;

        std::vector<std::vector<long long>> g(nw, std::vector<long long>(nw, 0));
        int mu = 0;
        for (int k = 0; k < d.n; ++k) {
            // corner colors alternate; white corners are {0,2} or {1,3}
            bool white02 = (color[d.face_of_corner(k, 0)] == white);
            int eta = white02 ? -1 : +1;
            // vertical sense of the two strands in the frame where the white
            // regions sit east and west: they agree iff (sign>0) == !white02
            bool same_sense = (d.sign[k] > 0) != white02;
            if (same_sense) mu += eta; // type II crossings feed the correction
            int fa = white02 ? d.face_of_corner(k, 0) : d.face_of_corner(k, 1);
            int fb = white02 ? d.face_of_corner(k, 2) : d.face_of_corner(k, 3);
            int i = widx[fa], j = widx[fb];
            if (i != j) {
                g[i][j] -= eta;
                g[j][i] -= eta;
                g[i][i] += eta;
                g[j][j] += eta;
            }
        }
        // delete the last white region's row and column
        std::vector<std::vector<detail::Frac>> m(nw - 1, std::vector<detail::Frac>(nw - 1));
        for (int i = 0; i + 1 < nw; ++i)
            for (int j = 0; j + 1 < nw; ++j) m[i][j] = detail::Frac(g[i][j]);
        return detail::sym_signature(std::move(m)) - mu;
    };

    int s0 = sigma_for(0);
    int s1 = sigma_for(1);
    if (s0 != s1)
        throw Error(ErrorKind::Validation, "Gordon-Litherland computation mismatch between colorings");
    return s0;
}

inline int signature(const PdCode& pd) { return signature(build_diagram(pd)); }

} // namespace lagfill

#endif

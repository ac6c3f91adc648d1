// HOMFLYPT by skein recursion with memoization.
// Convention: v*P(L+) - v^-1*P(L-) = z*P(L0), P(unknot) = 1.
#ifndef LAGFILL_HOMFLY_HPP
#define LAGFILL_HOMFLY_HPP

#include <array>
#include <future>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "lagfill/diagram.hpp"
#include "lagfill/laurent.hpp"

namespace lagfill {

// Mutable diagram for skein states and Reidemeister surgery. Slots keep the
// geometric counterclockwise order of the source PD tuple; diagonal A is
// slots {0,2}, diagonal B slots {1,3}.
struct SkeinDiagram {
    std::vector<int> mate;       // dart -> dart
    std::vector<char> incoming;  // dart -> the arc ends here
    std::vector<char> alive;     // per crossing
    std::vector<char> over_diag; // per crossing: 0 = diagonal A over, 1 = B over
    int free_loops = 0;
    int n_alive = 0;

    static SkeinDiagram from(const OrientedDiagram& d) {
        SkeinDiagram s;
        s.mate = d.mate;
        s.incoming.resize(4 * d.n);
        for (int e = 0; e < 4 * d.n; ++e) s.incoming[e] = d.dart_in[e];
        s.alive.assign(d.n, 1);
        s.over_diag.assign(d.n, 1); // PD tuples put the under strand on diagonal A
        s.free_loops = d.pd.trivial_loops;
        s.n_alive = d.n;
        return s;
    }

    int n_slots() const { return static_cast<int>(alive.size()); }
    bool is_dart_of(int dart, int k) const { return dart >= 4 * k && dart < 4 * k + 4; }

    int in_slot(int k, int diag) const {
        int s0 = diag, s1 = diag + 2;
        return incoming[4 * k + s0] ? s0 : s1;
    }
    int out_slot(int k, int diag) const {
        int s0 = diag, s1 = diag + 2;
        return incoming[4 * k + s0] ? s1 : s0;
    }
    int sign(int k) const {
        int o = in_slot(k, over_diag[k]);
        int u = in_slot(k, 1 - over_diag[k]);
        return ((o - u + 4) % 4 == 1) ? +1 : -1;
    }
    int writhe() const {
        int w = 0;
        for (int k = 0; k < n_slots(); ++k)
            if (alive[k]) w += sign(k);
        return w;
    }

    void switch_crossing(int k) { over_diag[k] ^= 1; }

    // Remove crossings in `dead`, rewiring via the given virtual arcs between
    // darts of dead crossings. Closed components become free loops.
    void resolve(const std::vector<int>& dead, std::vector<std::pair<int, int>> virt) {
        auto dead_dart = [&](int e) {
            for (int k : dead)
                if (is_dart_of(e, k)) return true;
            return false;
        };
        std::vector<char> used(virt.size(), 0);
        auto find_virt = [&](int e) {
            for (size_t i = 0; i < virt.size(); ++i)
                if (virt[i].first == e || virt[i].second == e) return static_cast<int>(i);
            return -1;
        };
        for (size_t vi = 0; vi < virt.size(); ++vi) {
            if (used[vi]) continue;
            used[vi] = 1;
            int ends[2] = {virt[vi].first, virt[vi].second};
            int ext[2] = {-1, -1};
            bool closed = false;
            for (int side = 0; side < 2 && !closed; ++side) {
                int cur = ends[side];
                while (true) {
                    int x = mate[cur];
                    if (!dead_dart(x)) {
                        ext[side] = x;
                        break;
                    }
                    int vj = find_virt(x);
                    if (vj < 0)
                        throw Error(ErrorKind::Validation, "surgery: dangling dead dart");
                    if (used[vj]) {
                        closed = true;
                        break;
                    }
                    used[vj] = 1;
                    cur = (virt[vj].first == x) ? virt[vj].second : virt[vj].first;
                }
            }
            if (closed) {
                free_loops++;
                continue;
            }
            mate[ext[0]] = ext[1];
            mate[ext[1]] = ext[0];
        }
        for (int k : dead) {
            alive[k] = 0;
            n_alive--;
        }
    }

    // oriented smoothing (independent of over/under)
    void smooth(int k) {
        int iA = 4 * k + in_slot(k, 0), oA = 4 * k + out_slot(k, 0);
        int iB = 4 * k + in_slot(k, 1), oB = 4 * k + out_slot(k, 1);
        resolve({k}, {{iA, oB}, {iB, oA}});
    }

    // detect a Reidemeister-I kink at k: a self-arc between CCW-adjacent slots
    bool is_kink(int k, int* through_in = nullptr, int* through_out = nullptr) const {
        if (!alive[k]) return false;
        for (int s = 0; s < 4; ++s) {
            int d1 = 4 * k + s, d2 = 4 * k + (s + 1) % 4;
            if (mate[d1] == d2) {
                int t1 = 4 * k + (s + 2) % 4, t2 = 4 * k + (s + 3) % 4;
                if (through_in) *through_in = incoming[t1] ? t1 : t2;
                if (through_out) *through_out = incoming[t1] ? t2 : t1;
                return true;
            }
        }
        return false;
    }

    void remove_kink(int k) {
        int ti = 0, to = 0;
        if (!is_kink(k, &ti, &to)) throw Error(ErrorKind::Validation, "not a kink");
        resolve({k}, {{ti, to}});
    }

    // reducible R2 pair: a bigon between k and l with one strand over at both
    bool find_r2(int& k_out, int& l_out) const {
        for (int k = 0; k < n_slots(); ++k) {
            if (!alive[k]) continue;
            for (int s = 0; s < 4; ++s) {
                int d1 = 4 * k + s, d2 = 4 * k + (s + 1) % 4;
                int e1 = mate[d1], e2 = mate[d2];
                int l = e1 / 4;
                if (l == k || e2 / 4 != l || !alive[l]) continue;
                int se1 = e1 % 4, se2 = e2 % 4;
                if ((se2 + 1) % 4 != se1) continue;
                // strand through d1: diagonal s%2 at k, diagonal se1%2 at l
                bool over_at_k = (over_diag[k] == s % 2);
                bool over_at_l = (over_diag[l] == se1 % 2);
                if (over_at_k != over_at_l) continue;
                k_out = k;
                l_out = l;
                return true;
            }
        }
        return false;
    }

    void remove_r2(int k, int l) {
        // rediscover the bigon darts
        for (int s = 0; s < 4; ++s) {
            int d1 = 4 * k + s, d2 = 4 * k + (s + 1) % 4;
            int e1 = mate[d1], e2 = mate[d2];
            if (e1 / 4 != l || e2 / 4 != l) continue;
            int se1 = e1 % 4, se2 = e2 % 4;
            if ((se2 + 1) % 4 != se1) continue;
            bool over_at_k = (over_diag[k] == s % 2);
            bool over_at_l = (over_diag[l] == se1 % 2);
            if (over_at_k != over_at_l) continue;
            // outer continuations of the two strands
            int a1 = 4 * k + (s + 2) % 4, b1 = 4 * l + (se1 + 2) % 4; // strand of d1
            int a2 = 4 * k + (s + 3) % 4, b2 = 4 * l + (se2 + 2) % 4; // strand of d2
            resolve({k, l}, {{a1, b1}, {a2, b2}});
            return;
        }
        throw Error(ErrorKind::Validation, "not an R2 pair");
    }

    void simplify() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int k = 0; k < n_slots(); ++k)
                if (alive[k] && is_kink(k)) {
                    remove_kink(k);
                    changed = true;
                }
            int k, l;
            if (find_r2(k, l)) {
                remove_r2(k, l);
                changed = true;
            }
        }
    }

    // Knot traversal from a fixed scheme: smallest alive crossing, diagonal A
    // incoming dart; later components start at the earliest-visited crossing
    // with an untraversed diagonal. Returns per-step (crossing, diagonal).
    struct Traversal {
        std::vector<std::pair<int, int>> steps; // (crossing, diagonal entered)
        int components = 0;
    };
    Traversal traverse() const {
        Traversal t;
        std::vector<std::array<char, 2>> seen(n_slots(), {0, 0});
        std::vector<int> visit_order;
        int traversed = 0, total = 2 * n_alive;
        while (traversed < total) {
            int start_dart = -1;
            for (int k : visit_order) {
                for (int diag = 0; diag < 2; ++diag)
                    if (!seen[k][diag]) {
                        start_dart = 4 * k + in_slot(k, diag);
                        break;
                    }
                if (start_dart >= 0) break;
            }
            if (start_dart < 0) {
                for (int k = 0; k < n_slots() && start_dart < 0; ++k)
                    if (alive[k] && !seen[k][0]) start_dart = 4 * k + in_slot(k, 0);
            }
            t.components++;
            int cur = start_dart;
            while (true) {
                int k = cur / 4, diag = (cur % 4) % 2;
                if (seen[k][diag]) break; // component closed
                seen[k][diag] = 1;
                traversed++;
                if (!seen[k][1 - diag]) {
                    bool first_time = true;
                    for (int kk : visit_order)
                        if (kk == k) first_time = false;
                    if (first_time) visit_order.push_back(k);
                }
                t.steps.push_back({k, diag});
                cur = mate[4 * k + out_slot(k, diag)];
            }
        }
        return t;
    }

    // first crossing met on its under strand before its over strand; -1 if none
    int first_bad_crossing() const {
        std::vector<char> met(n_slots(), 0);
        Traversal t = traverse();
        for (auto [k, diag] : t.steps) {
            if (met[k]) continue;
            met[k] = 1;
            if (diag != over_diag[k]) return k;
        }
        return -1;
    }

    // canonical key: lexmin relabeling over all traversal starts
    std::string canonical_key() const {
        std::vector<int> best;
        for (int k0 = 0; k0 < n_slots(); ++k0) {
            if (!alive[k0]) continue;
            for (int diag0 = 0; diag0 < 2; ++diag0) {
                std::vector<int> enc = encode_from(4 * k0 + in_slot(k0, diag0));
                if (best.empty() || enc < best) best = std::move(enc);
            }
        }
        best.push_back(free_loops);
        std::string s(reinterpret_cast<const char*>(best.data()), best.size() * sizeof(int));
        return s;
    }

private:
    std::vector<int> encode_from(int start_dart) const {
        std::vector<int> enc;
        std::vector<int> label(n_slots(), -1);
        std::vector<std::array<char, 2>> seen(n_slots(), {0, 0});
        std::vector<int> visit_order;
        int next_label = 0;
        int traversed = 0, total = 2 * n_alive;
        int cur = start_dart;
        while (traversed < total) {
            int k = cur / 4, diag = (cur % 4) % 2;
            if (seen[k][diag]) { // component closed; open the next one
                enc.push_back(-2);
                int nd = -1;
                for (int kk : visit_order) {
                    for (int dg = 0; dg < 2; ++dg)
                        if (!seen[kk][dg]) {
                            nd = 4 * kk + in_slot(kk, dg);
                            break;
                        }
                    if (nd >= 0) break;
                }
                cur = nd;
                continue;
            }
            seen[k][diag] = 1;
            traversed++;
            if (label[k] < 0) {
                label[k] = next_label++;
                visit_order.push_back(k);
                enc.push_back(-1);
            } else {
                enc.push_back(label[k]);
            }
            enc.push_back(diag == over_diag[k] ? 1 : 0);
            enc.push_back(sign(k));
            cur = mate[4 * k + out_slot(k, diag)];
        }
        return enc;
    }
};

// Rebuild a PD code (consecutive arc labels) from a skein diagram.
inline PdCode emit_pd(const SkeinDiagram& s) {
    PdCode pd;
    pd.trivial_loops = s.free_loops;
    if (s.n_alive == 0) return pd;

    const int ns = s.n_slots();
    std::vector<int> arc_of_dart(4 * ns, 0);
    std::vector<std::array<char, 2>> seen(ns, {0, 0});
    std::vector<int> visit_order;
    int traversed = 0, total = 2 * s.n_alive, next_arc = 1;
    while (traversed < total) {
        int start = -1;
        for (int k : visit_order) {
            for (int dg = 0; dg < 2 && start < 0; ++dg)
                if (!seen[k][dg]) start = 4 * k + s.in_slot(k, dg);
            if (start >= 0) break;
        }
        if (start < 0)
            for (int k = 0; k < ns && start < 0; ++k)
                if (s.alive[k] && !seen[k][0]) start = 4 * k + s.in_slot(k, 0);

        int first_in = start, cur = start;
        while (true) {
            int k = cur / 4, diag = (cur % 4) % 2;
            if (seen[k][diag]) break;
            seen[k][diag] = 1;
            traversed++;
            bool fresh = true;
            for (int kk : visit_order)
                if (kk == k) fresh = false;
            if (fresh) visit_order.push_back(k);
            int out = 4 * k + s.out_slot(k, diag);
            int nxt = s.mate[out];
            int arc = next_arc++;
            arc_of_dart[out] = arc;
            arc_of_dart[nxt] = arc;
            if (nxt == first_in) break;
            cur = nxt;
        }
    }

    for (int k = 0; k < ns; ++k) {
        if (!s.alive[k]) continue;
        int u = s.in_slot(k, 1 - s.over_diag[k]);
        std::array<int, 4> x{};
        for (int i = 0; i < 4; ++i) x[i] = arc_of_dart[4 * k + (u + i) % 4];
        pd.crossings.push_back(x);
    }
    return pd;
}

class HomflyEngine {
public:
    explicit HomflyEngine(int budget = 16) : budget_(budget) {}

    bool parallel_top_level = false;

    LaurentPoly2 operator()(const OrientedDiagram& d) {
        SkeinDiagram s = SkeinDiagram::from(d);
        if (s.n_alive > budget_)
            throw Error(ErrorKind::Budget,
                        "crossing budget exceeded (" + std::to_string(s.n_alive) + " > " +
                            std::to_string(budget_) + ")");
        return eval(std::move(s), 0);
    }
    LaurentPoly2 operator()(const PdCode& pd) { return (*this)(build_diagram(pd)); }

    static LaurentPoly2 delta() {
        return LaurentPoly2::monomial(1, -1) - LaurentPoly2::monomial(-1, -1);
    }
    static LaurentPoly2 delta_pow(int e) {
        LaurentPoly2 r = LaurentPoly2::constant(1);
        for (int i = 0; i < e; ++i) r *= delta();
        return r;
    }

private:
    int budget_;
    std::mutex mu_;
    std::unordered_map<std::string, LaurentPoly2> memo_;

    LaurentPoly2 eval(SkeinDiagram s, int depth) {
        s.simplify();
        int extra = s.free_loops;
        s.free_loops = 0;
        if (s.n_alive == 0) return delta_pow(extra - 1);
        LaurentPoly2 core = eval_core(std::move(s), depth);
        return extra ? core * delta_pow(extra) : core;
    }

    LaurentPoly2 eval_core(SkeinDiagram s, int depth) {
        std::string key = s.canonical_key();
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        LaurentPoly2 result;
        int kb = s.first_bad_crossing();
        if (kb < 0) {
            result = delta_pow(s.traverse().components - 1);
        } else {
            int eps = s.sign(kb);
            SkeinDiagram sw = s;
            sw.switch_crossing(kb);
            SkeinDiagram sm = std::move(s);
            sm.smooth(kb);
            LaurentPoly2 p_sw, p_sm;
            if (parallel_top_level && depth == 0) {
                auto fut = std::async(std::launch::async,
                                      [&]() { return eval(std::move(sw), depth + 1); });
                p_sm = eval(std::move(sm), depth + 1);
                p_sw = fut.get();
            } else {
                p_sw = eval(std::move(sw), depth + 1);
                p_sm = eval(std::move(sm), depth + 1);
            }
            if (eps > 0) result = p_sw.shifted(-2, 0) + p_sm.shifted(-1, 1);
            else result = p_sw.shifted(2, 0) - p_sm.shifted(1, 1);
        }
        {
            std::lock_guard<std::mutex> lk(mu_);
            memo_.emplace(std::move(key), result);
        }
        return result;
    }
};

inline LaurentPoly2 homfly(const OrientedDiagram& d, int budget = 16) {
    HomflyEngine e(budget);
    return e(d);
}
inline LaurentPoly2 homfly(const PdCode& pd, int budget = 16) {
    return homfly(build_diagram(pd), budget);
}

inline int max_deg_v(const LaurentPoly2& p) {
    if (p.is_zero()) throw Error(ErrorKind::Validation, "zero polynomial");
    return p.max_deg_v();
}

// Morton-Franks-Williams: tb(Lambda) + |r(Lambda)| <= -max deg_v P - 1
inline int mfw_tb_bound(const LaurentPoly2& p) { return -max_deg_v(p) - 1; }

} // namespace lagfill

#endif

// Exact bivariate Laurent polynomials in (v, z) with integer coefficients.
#ifndef LAGFILL_LAURENT_HPP
#define LAGFILL_LAURENT_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace lagfill {

// Sparse exact polynomial; keys are (deg_v, deg_z), values nonzero.
class LaurentPoly2 {
public:
    using Exponents = std::pair<int, int>;
    using Map = std::map<Exponents, long long>;

    LaurentPoly2() = default;

    static LaurentPoly2 constant(long long c) {
        LaurentPoly2 p;
        p.add_term(0, 0, c);
        return p;
    }
    static LaurentPoly2 monomial(int dv, int dz, long long c = 1) {
        LaurentPoly2 p;
        p.add_term(dv, dz, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }

    void add_term(int dv, int dz, long long c) {
        if (c == 0) return;
        auto key = Exponents{dv, dz};
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long coeff(int dv, int dz) const {
        auto it = terms_.find({dv, dz});
        return it == terms_.end() ? 0 : it->second;
    }

    LaurentPoly2& operator+=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
        return *this;
    }
    LaurentPoly2& operator-=(const LaurentPoly2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }

    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
        LaurentPoly2 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    LaurentPoly2& operator*=(const LaurentPoly2& o) { return *this = *this * o; }

    // multiply by c * v^dv * z^dz
    LaurentPoly2 shifted(int dv, int dz, long long c = 1) const {
        LaurentPoly2 r;
        for (const auto& [e, k] : terms_) r.add_term(e.first + dv, e.second + dz, k * c);
        return r;
    }

    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

    int max_deg_v() const {
        if (terms_.empty()) throw std::domain_error("max_deg_v of zero polynomial");
        int m = terms_.begin()->first.first;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (e.first > m) m = e.first;
        }
        return m;
    }
    int min_deg_v() const {
        if (terms_.empty()) throw std::domain_error("min_deg_v of zero polynomial");
        int m = terms_.begin()->first.first;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (e.first < m) m = e.first;
        }
        return m;
    }
    int max_deg_z() const {
        if (terms_.empty()) throw std::domain_error("max_deg_z of zero polynomial");
        int m = terms_.begin()->first.second;
        for (const auto& [e, c] : terms_) {
            (void)c;
            if (e.second > m) m = e.second;
        }
        return m;
    }

    // v -> -1/v, z -> z (image of the mirror diagram)
    LaurentPoly2 mirrored() const {
        LaurentPoly2 r;
        for (const auto& [e, c] : terms_) {
            long long s = (e.first % 2 == 0) ? c : -c;
            r.add_term(-e.first, e.second, s);
        }
        return r;
    }

    // Terms "<coef>*v^<a>*z^<b>" sorted by (a, b) descending.
    std::string text() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!first) os << " + ";
            first = false;
            os << c << "*v^" << e.first << "*z^" << e.second;
        }
        return os.str();
    }

private:
    Map terms_;
};

} // namespace lagfill

#endif

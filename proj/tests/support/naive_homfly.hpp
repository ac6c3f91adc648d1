// Brute-force skein resolver used as an independent oracle for the memoized
// engine. No memo, no canonical keys, no R-move simplification; arcs are bare
// integers and smoothing works by relabeling.
#ifndef LAGFILL_TESTS_NAIVE_HOMFLY_HPP
#define LAGFILL_TESTS_NAIVE_HOMFLY_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "lagfill/diagram.hpp"
#include "lagfill/laurent.hpp"

namespace lagfill_tests {

using lagfill::LaurentPoly2;

struct NaiveCross {
    int uin, oin, uout, oout;
    int sign;
};

struct NaiveState {
    std::vector<NaiveCross> x;
    int loops = 0;
};

inline NaiveState naive_from(const lagfill::OrientedDiagram& d) {
    NaiveState s;
    s.loops = d.pd.trivial_loops;
    for (int k = 0; k < d.n; ++k) {
        int oi = d.over_in[k], oo = (oi == 1) ? 3 : 1;
        s.x.push_back({d.arc(k, 0), d.arc(k, oi), d.arc(k, 2), d.arc(k, oo), d.sign[k]});
    }
    return s;
}

inline LaurentPoly2 naive_delta_pow(int e) {
    LaurentPoly2 d = LaurentPoly2::monomial(1, -1) - LaurentPoly2::monomial(-1, -1);
    LaurentPoly2 r = LaurentPoly2::constant(1);
    for (int i = 0; i < e; ++i) r *= d;
    return r;
}

// first crossing reached on its under strand before its over strand,
// traversing components from their smallest arc labels; -1 when descending
inline int naive_first_bad(const NaiveState& s) {
    std::set<int> arcs;
    for (const auto& c : s.x) {
        arcs.insert(c.uin);
        arcs.insert(c.oin);
    }
    std::set<int> visited_arcs;
    std::vector<char> met(s.x.size(), 0);
    for (int a0 : arcs) {
        if (visited_arcs.count(a0)) continue;
        int a = a0;
        while (!visited_arcs.count(a)) {
            visited_arcs.insert(a);
            int ki = -1;
            bool via_under = false;
            for (size_t k = 0; k < s.x.size(); ++k) {
                if (s.x[k].uin == a) {
                    ki = static_cast<int>(k);
                    via_under = true;
                    break;
                }
                if (s.x[k].oin == a) {
                    ki = static_cast<int>(k);
                    via_under = false;
                    break;
                }
            }
            if (!met[ki]) {
                met[ki] = 1;
                if (via_under) return ki;
            }
            a = via_under ? s.x[ki].uout : s.x[ki].oout;
        }
    }
    return -1;
}

inline int naive_components(const NaiveState& s) {
    std::set<int> arcs;
    for (const auto& c : s.x) {
        arcs.insert(c.uin);
        arcs.insert(c.oin);
    }
    std::set<int> visited;
    int comps = 0;
    for (int a0 : arcs) {
        if (visited.count(a0)) continue;
        comps++;
        int a = a0;
        while (!visited.count(a)) {
            visited.insert(a);
            for (const auto& c : s.x) {
                if (c.uin == a) {
                    a = c.uout;
                    break;
                }
                if (c.oin == a) {
                    a = c.oout;
                    break;
                }
            }
        }
    }
    return comps;
}

inline void naive_rename(NaiveState& s, int from, int to) {
    for (auto& c : s.x) {
        if (c.uin == from) c.uin = to;
        if (c.oin == from) c.oin = to;
        if (c.uout == from) c.uout = to;
        if (c.oout == from) c.oout = to;
    }
}

inline LaurentPoly2 naive_homfly(NaiveState s) {
    if (s.x.empty()) return naive_delta_pow(s.loops - 1);
    int kb = naive_first_bad(s);
    if (kb < 0) return naive_delta_pow(naive_components(s) + s.loops - 1);

    NaiveCross c = s.x[kb];

    NaiveState switched = s;
    switched.x[kb] = {c.oin, c.uin, c.oout, c.uout, -c.sign};

    NaiveState smoothed = s;
    smoothed.x.erase(smoothed.x.begin() + kb);
    // oriented smoothing joins uin->oout and oin->uout
    int a = c.uin, b = c.oout, p = c.oin, q = c.uout;
    if (a == b) {
        smoothed.loops++;
    } else {
        naive_rename(smoothed, b, a);
        if (p == b) p = a;
        if (q == b) q = a;
    }
    if (p == q) smoothed.loops++;
    else naive_rename(smoothed, q, p);

    LaurentPoly2 p_sw = naive_homfly(std::move(switched));
    LaurentPoly2 p_sm = naive_homfly(std::move(smoothed));
    if (c.sign > 0) return p_sw.shifted(-2, 0) + p_sm.shifted(-1, 1);
    return p_sw.shifted(2, 0) - p_sm.shifted(1, 1);
}

inline LaurentPoly2 naive_homfly(const lagfill::OrientedDiagram& d) {
    return naive_homfly(naive_from(d));
}

} // namespace lagfill_tests

#endif

// Shared small-diagram corpus and PD helpers for the test suites.
#ifndef LAGFILL_TESTS_CORPUS_HPP
#define LAGFILL_TESTS_CORPUS_HPP

#include <string>
#include <utility>
#include <vector>

#include "lagfill/diagram.hpp"
#include "lagfill/homfly.hpp"

namespace lagfill_tests {

inline const char* right_trefoil_pd() { return "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"; }
inline const char* figure_eight_pd() { return "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)"; }

// name, input text (pd or braid), crossing count
inline std::vector<std::pair<std::string, std::string>> small_corpus() {
    return {
        {"unknot", "braid 1:"},
        {"kink_neg", "X(1,1,2,2)"},
        {"kink_pos", "X(1,2,2,1)"},
        {"hopf_pos", "braid 2: 1 1"},
        {"hopf_neg", "braid 2: -1 -1"},
        {"trefoil", right_trefoil_pd()},
        {"trefoil_braid", "braid 2: 1 1 1"},
        {"trefoil_t32", "braid 3: 1 2 1 2"},
        {"figure_eight", figure_eight_pd()},
        {"unknot_r2", "braid 2: 1 1 -1"},
        {"unlink2_r2", "braid 2: 1 -1"},
        {"t25", "braid 2: 1 1 1 1 1"},
        {"t24_link", "braid 2: 1 1 1 1"},
        {"twist_m52", "braid 3: 1 1 2 -1 2"},
    };
}

inline lagfill::PdCode corpus_pd(const std::string& text) {
    if (lagfill::looks_like_braid(text)) return lagfill::braid_closure(lagfill::parse_braid(text));
    return lagfill::parse_pd(text);
}

// connected sum: cut one arc in each diagram and cross-join
inline lagfill::PdCode pd_connect_sum(const lagfill::PdCode& a, const lagfill::PdCode& b) {
    using namespace lagfill;
    OrientedDiagram da = build_diagram(a), db = build_diagram(b);
    SkeinDiagram sa = SkeinDiagram::from(da), sb = SkeinDiagram::from(db);
    SkeinDiagram s;
    int na = da.n;
    s.alive = sa.alive;
    s.alive.insert(s.alive.end(), sb.alive.begin(), sb.alive.end());
    s.over_diag = sa.over_diag;
    s.over_diag.insert(s.over_diag.end(), sb.over_diag.begin(), sb.over_diag.end());
    s.incoming = sa.incoming;
    s.incoming.insert(s.incoming.end(), sb.incoming.begin(), sb.incoming.end());
    s.mate = sa.mate;
    for (int m : sb.mate) s.mate.push_back(m + 4 * na);
    s.n_alive = sa.n_alive + sb.n_alive;
    // cut the arc at dart 0 of each part and cross-join
    int xa_out = s.incoming[0] ? s.mate[0] : 0;
    int xa_in = s.incoming[0] ? 0 : s.mate[0];
    int d0b = 4 * na;
    int xb_out = s.incoming[d0b] ? s.mate[d0b] : d0b;
    int xb_in = s.incoming[d0b] ? d0b : s.mate[d0b];
    s.mate[xa_out] = xb_in;
    s.mate[xb_in] = xa_out;
    s.mate[xb_out] = xa_in;
    s.mate[xa_in] = xb_out;
    return emit_pd(s);
}

} // namespace lagfill_tests

#endif

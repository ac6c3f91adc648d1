// Legendrian front projections as event lists over a running strand stack.
// Events: L<p> left cusp, R<p> right cusp, X<p> crossing; p is the 1-based
// index of the upper of the two affected adjacent strands.
#ifndef LAGFILL_FRONT_HPP
#define LAGFILL_FRONT_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lagfill/mondrian.hpp"

namespace lagfill {

struct FrontEvent {
    enum Kind { LeftCusp, RightCusp, Crossing } kind;
    int pos = 1;

    bool operator==(const FrontEvent&) const = default;
};

struct FrontDiagram {
    std::vector<FrontEvent> events;
    // orientation choice per component (component = order of first left cusp);
    // true flips the canonical orientation
    std::vector<bool> comp_flip;

    bool operator==(const FrontDiagram& o) const { return events == o.events; }

    std::string text() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& e : events) {
            if (!first) os << ",";
            first = false;
            os << (e.kind == FrontEvent::LeftCusp ? 'L' : e.kind == FrontEvent::RightCusp ? 'R' : 'X')
               << e.pos;
        }
        return os.str();
    }

    static FrontDiagram parse(const std::string& s) {
        FrontDiagram f;
        size_t i = 0;
        while (i < s.size()) {
            while (i < s.size() && (s[i] == ',' || std::isspace(static_cast<unsigned char>(s[i])))) ++i;
            if (i >= s.size()) break;
            char c = s[i++];
            FrontEvent e;
            if (c == 'L') e.kind = FrontEvent::LeftCusp;
            else if (c == 'R') e.kind = FrontEvent::RightCusp;
            else if (c == 'X') e.kind = FrontEvent::Crossing;
            else throw Error(ErrorKind::Parse, "bad front event");
            size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start) throw Error(ErrorKind::Parse, "bad front position");
            e.pos = std::stoi(s.substr(start, i - start));
            f.events.push_back(e);
        }
        return f;
    }
};

// Full sweep analysis: validity, orientations, signs, tb/rot, Maslov data.
struct FrontAnalysis {
    int n_ids = 0;
    int n_components = 0;
    int writhe = 0, left_cusps = 0, right_cusps = 0;
    int tb = 0, rot = 0;
    std::vector<int> dir_of_id;  // +1 toward +y
    std::vector<int> comp_of_id;
    std::vector<int> maslov_of_id; // mod 2, knots only (empty otherwise)
    // per crossing event, in event order:
    std::vector<int> crossing_events;               // event indices
    std::vector<std::pair<int, int>> crossing_ids;  // (upper, lower) before the swap
    std::vector<int> crossing_sign;
    // per cusp event: (upper, lower) ids
    std::map<int, std::pair<int, int>> cusp_ids;
};

inline FrontAnalysis analyze_front(const FrontDiagram& f) {
    FrontAnalysis a;
    std::vector<int> stack;
    struct Join {
        int a, b;
    };
    std::vector<Join> joins;
    for (int ei = 0; ei < static_cast<int>(f.events.size()); ++ei) {
        const auto& e = f.events[ei];
        int p = e.pos;
        if (e.kind == FrontEvent::LeftCusp) {
            if (p < 1 || p > static_cast<int>(stack.size()) + 1)
                throw Error(ErrorKind::Validation, "left cusp out of range");
            int up = a.n_ids++, lo = a.n_ids++;
            stack.insert(stack.begin() + (p - 1), lo);
            stack.insert(stack.begin() + (p - 1), up);
            joins.push_back({up, lo});
            a.cusp_ids[ei] = {up, lo};
            a.left_cusps++;
        } else if (e.kind == FrontEvent::RightCusp) {
            if (p < 1 || p + 1 > static_cast<int>(stack.size()))
                throw Error(ErrorKind::Validation, "right cusp out of range");
            int up = stack[p - 1], lo = stack[p];
            stack.erase(stack.begin() + (p - 1), stack.begin() + (p + 1));
            joins.push_back({up, lo});
            a.cusp_ids[ei] = {up, lo};
            a.right_cusps++;
        } else {
            if (p < 1 || p + 1 > static_cast<int>(stack.size()))
                throw Error(ErrorKind::Validation, "crossing out of range");
            a.crossing_events.push_back(ei);
            a.crossing_ids.push_back({stack[p - 1], stack[p]});
            std::swap(stack[p - 1], stack[p]);
        }
    }
    if (!stack.empty()) throw Error(ErrorKind::Validation, "strands remain open at the right end");

    // orientation: strands joined at a cusp point opposite ways
    std::vector<int> comp(a.n_ids, -1), dir(a.n_ids, 0);
    std::vector<std::vector<int>> adj(a.n_ids);
    auto jidx = [&](int x, int y) { return x * a.n_ids + y; };
    (void)jidx;
    for (const auto& j : joins) {
        adj[j.a].push_back(j.b);
        adj[j.b].push_back(j.a);
    }
    int ncomp = 0;
    for (int id0 = 0; id0 < a.n_ids; ++id0) {
        if (comp[id0] >= 0) continue;
        bool flip = ncomp < static_cast<int>(f.comp_flip.size()) && f.comp_flip[ncomp];
        comp[id0] = ncomp;
        dir[id0] = flip ? -1 : +1;
        std::vector<int> q{id0};
        while (!q.empty()) {
            int x = q.back();
            q.pop_back();
            for (int y : adj[x]) {
                if (comp[y] < 0) {
                    comp[y] = ncomp;
                    dir[y] = -dir[x];
                    q.push_back(y);
                } else if (dir[y] != -dir[x]) {
                    throw Error(ErrorKind::Validation, "inconsistent front orientation");
                }
            }
        }
        ncomp++;
    }
    a.n_components = ncomp;
    a.dir_of_id = dir;
    a.comp_of_id = comp;

    for (auto [u, l] : a.crossing_ids) {
        int sg = (dir[u] == dir[l]) ? +1 : -1;
        a.crossing_sign.push_back(sg);
        a.writhe += sg;
    }
    a.tb = a.writhe - a.right_cusps;

    int down = 0, up = 0;
    for (int ei = 0; ei < static_cast<int>(f.events.size()); ++ei) {
        const auto& e = f.events[ei];
        if (e.kind == FrontEvent::Crossing) continue;
        auto [hi, lo] = a.cusp_ids[ei];
        if (e.kind == FrontEvent::LeftCusp) (dir[hi] > 0 ? up : down)++;
        else (dir[hi] > 0 ? down : up)++;
    }
    a.rot = (down - up) / 2;

    if (ncomp == 1) {
        // Maslov potential mod 2: flips across each cusp
        std::vector<int> mu(a.n_ids, -1);
        mu[0] = 0;
        std::vector<int> q{0};
        while (!q.empty()) {
            int x = q.back();
            q.pop_back();
            for (int y : adj[x]) {
                int want = mu[x] ^ 1;
                if (mu[y] < 0) {
                    mu[y] = want;
                    q.push_back(y);
                } else if (mu[y] != want) {
                    throw Error(ErrorKind::Validation, "malformed front: inconsistent Maslov potential");
                }
            }
        }
        a.maslov_of_id = mu;
    }
    return a;
}

inline int tb(const FrontDiagram& f) { return analyze_front(f).tb; }
inline int rot(const FrontDiagram& f) { return analyze_front(f).rot; }

// strand-piece Maslov potentials mod 2 (knot fronts only)
inline std::vector<int> maslov_mod2(const FrontDiagram& f) {
    FrontAnalysis a = analyze_front(f);
    if (a.n_components != 1)
        throw Error(ErrorKind::Unsupported, "maslov_mod2 requires a knot front");
    return a.maslov_of_id;
}

// --- synthesis from Mondrian position --------------------------------------

inline FrontDiagram front_from_mondrian(const MondrianDiagram& m) {
    MondrianReport rep = validate_mondrian(m);
    if (!rep.all_pass) {
        std::string why;
        for (const auto& it : rep.items)
            if (!it.pass) why += it.condition + "; ";
        throw Error(ErrorKind::Validation, "invalid Mondrian diagram: " + why);
    }

    FrontDiagram f;
    auto rank = detail::token_ranks(m);
    std::vector<int> stack; // tokens
    auto pos_of = [&](int token) {
        for (size_t i = 0; i < stack.size(); ++i)
            if (stack[i] == token) return static_cast<int>(i) + 1;
        throw Error(ErrorKind::Validation, "token not on the stack");
    };

    // the P1 junction pair shares tokens: f-side circles alias to the e-side
    std::map<int, int> alias; // circle -> circle whose tokens it uses
    int junc_e = -1, junc_f = -1;
    if (m.mode == MondrianMode::P1 && m.neg_rung >= 0) {
        const auto& r = m.rungs[m.neg_rung];
        if (m.circles[r.a].y_hi == r.y) {
            junc_e = r.a;
            junc_f = r.b;
        } else {
            junc_e = r.b;
            junc_f = r.a;
        }
        alias[junc_f] = junc_e;
    }
    auto tok = [&](int circle, int side) {
        auto it = alias.find(circle);
        return 2 * (it == alias.end() ? circle : it->second) + side;
    };

    // P2 clasp bookkeeping
    int clasp_i = -1, clasp_j = -1; // outer/upper and inner/lower circle
    bool clasp_nested = false;
    if (m.mode == MondrianMode::P2 && m.neg_rung >= 0) {
        const auto& r = m.rungs[m.neg_rung];
        if (m.circles[r.a].parent == r.b) {
            clasp_i = r.b;
            clasp_j = r.a;
            clasp_nested = true;
        } else if (m.circles[r.b].parent == r.a) {
            clasp_i = r.a;
            clasp_j = r.b;
            clasp_nested = true;
        } else {
            clasp_i = (rank[2 * r.a] < rank[2 * r.b]) ? r.a : r.b;
            clasp_j = (clasp_i == r.a) ? r.b : r.a;
        }
    }

    std::vector<int> first_circle_of_component; // component order by first cusp
    for (const auto& e : detail::sweep_events(m)) {
        if (e.kind == detail::SweepEvent::Open) {
            if (e.idx == junc_f) continue; // strands continue from junc_e
            int up = tok(e.idx, 0), lo = tok(e.idx, 1);
            int at = static_cast<int>(stack.size());
            for (size_t i = 0; i < stack.size(); ++i)
                if (rank[stack[i]] > rank[up]) {
                    at = static_cast<int>(i);
                    break;
                }
            stack.insert(stack.begin() + at, lo);
            stack.insert(stack.begin() + at, up);
            f.events.push_back({FrontEvent::LeftCusp, at + 1});
            first_circle_of_component.push_back(e.idx);
        } else if (e.kind == detail::SweepEvent::Close) {
            if (e.idx == junc_e) continue; // closed by junc_f later
            int circle = e.idx;
            int p = pos_of(tok(circle, 0));
            if (m.mode == MondrianMode::P2 && circle == clasp_j) {
                // the clasp displaced this circle's strands by one position
                p = clasp_nested ? p + 1 : p - 1;
            }
            f.events.push_back({FrontEvent::RightCusp, p});
            int up = tok(circle, 0), lo = tok(circle, 1);
            stack.erase(std::remove(stack.begin(), stack.end(), up), stack.end());
            stack.erase(std::remove(stack.begin(), stack.end(), lo), stack.end());
        } else {
            const auto& r = m.rungs[e.idx];
            if (r.z_oriented) { // P1 junction: a lone crossing mid-eye
                f.events.push_back({FrontEvent::Crossing, pos_of(tok(junc_e, 0))});
                continue;
            }
            if (m.mode == MondrianMode::P2 && e.idx == m.neg_rung) {
                f.events.push_back({FrontEvent::Crossing, pos_of(tok(clasp_j, 0))});
                continue;
            }
            // generic rung: the facing adjacent token pair of the two circles
            int found = -1;
            for (size_t i = 0; i + 1 < stack.size(); ++i) {
                int ca = stack[i] / 2, cb = stack[i + 1] / 2;
                auto real = [&](int c) {
                    // tokens are aliased for the junction pair
                    if (c == junc_e && junc_f >= 0) return -2; // matches either e or f
                    return c;
                };
                (void)real;
                auto matches = [&](int cx, int want) {
                    if (cx == want) return true;
                    if (junc_f >= 0 && cx == junc_e && want == junc_f) return true;
                    return false;
                };
                if ((matches(ca, r.a) && matches(cb, r.b)) ||
                    (matches(ca, r.b) && matches(cb, r.a))) {
                    found = static_cast<int>(i);
                    break;
                }
            }
            if (found < 0)
                throw Error(ErrorKind::Validation, "rung circles not adjacent during synthesis");
            f.events.push_back({FrontEvent::Crossing, found + 1});
        }
    }
    if (!stack.empty()) throw Error(ErrorKind::Validation, "synthesis left open strands");

    // component orientation flags: the first-opened circle of each component
    // dictates the flip so strand directions match the Mondrian orientations
    FrontAnalysis probe = analyze_front(f);
    std::vector<bool> flips;
    {
        // ids are assigned two per left cusp in event order; the k-th left cusp
        // belongs to first_circle_of_component[k]
        std::vector<int> first_id_circle(probe.n_ids, -1);
        int lc = 0;
        for (const auto& e : f.events)
            if (e.kind == FrontEvent::LeftCusp) {
                first_id_circle[2 * lc] = first_circle_of_component[lc];
                lc++;
            }
        flips.assign(probe.n_components, false);
        std::vector<bool> seen(probe.n_components, false);
        for (int id = 0; id < probe.n_ids; id += 2) {
            int c = probe.comp_of_id[id];
            if (seen[c]) continue;
            seen[c] = true;
            int circle = first_id_circle[id];
            int want = m.strand_dir(circle, true);
            // canonical assignment gives this id dir +1 when unflipped
            flips[c] = (want != probe.dir_of_id[id]) ? !f.comp_flip.empty() && false : false;
            flips[c] = (want == +1) ? false : true;
        }
    }
    f.comp_flip = flips;
    return f;
}

// --- flatten to a PD code ---------------------------------------------------

inline PdCode front_to_pd(const FrontDiagram& f) {
    FrontAnalysis a = analyze_front(f);
    PdCode pd;
    int nx = static_cast<int>(a.crossing_events.size());
    if (nx == 0) {
        pd.trivial_loops = a.n_components;
        return pd;
    }

    // passages per id, in event order (= y order along the strand)
    std::vector<std::vector<int>> passages(a.n_ids); // crossing indices
    for (int ci = 0; ci < nx; ++ci) {
        passages[a.crossing_ids[ci].first].push_back(ci);
        passages[a.crossing_ids[ci].second].push_back(ci);
    }
    // cusp partners at each end of an id: left partner (born together),
    // right partner (dies together)
    std::vector<int> left_partner(a.n_ids, -1), right_partner(a.n_ids, -1);
    for (auto& [ei, pr] : a.cusp_ids) {
        if (f.events[ei].kind == FrontEvent::LeftCusp) {
            left_partner[pr.first] = pr.second;
            left_partner[pr.second] = pr.first;
        } else {
            right_partner[pr.first] = pr.second;
            right_partner[pr.second] = pr.first;
        }
    }

    // trace components; number arcs consecutively; record in/out arcs per passage
    struct PassageArcs {
        int in_over = 0, out_over = 0, in_under = 0, out_under = 0;
    };
    std::vector<PassageArcs> parcs(nx);
    std::vector<char> id_done(a.n_ids, 0);
    int next_arc = 1;
    int loops = 0;
    for (int id0 = 0; id0 < a.n_ids; ++id0) {
        if (id_done[id0]) continue;
        // collect the full passage cycle of this component
        std::vector<std::pair<int, bool>> cyc; // (crossing idx, passing as upper/over)
        int id = id0;
        bool has_passage = false;
        while (!id_done[id]) {
            id_done[id] = 1;
            auto list = passages[id];
            if (a.dir_of_id[id] < 0) std::reverse(list.begin(), list.end());
            for (int ci : list) {
                cyc.push_back({ci, a.crossing_ids[ci].first == id});
                has_passage = true;
            }
            id = (a.dir_of_id[id] > 0) ? right_partner[id] : left_partner[id];
        }
        if (!has_passage) {
            loops++;
            continue;
        }
        int first_arc = next_arc;
        for (size_t i = 0; i < cyc.size(); ++i) {
            int in_arc = next_arc;
            int out_arc = (i + 1 == cyc.size()) ? first_arc : next_arc + 1;
            next_arc++;
            auto [ci, as_over] = cyc[i];
            if (as_over) {
                parcs[ci].in_over = in_arc;
                parcs[ci].out_over = out_arc;
            } else {
                parcs[ci].in_under = in_arc;
                parcs[ci].out_under = out_arc;
            }
        }
    }
    pd.trivial_loops = loops;

    // tuples: corners NW,SE carry the over strand (the one descending through
    // the crossing, i.e. the upper id), SW,NE the under strand; list corners
    // clockwise in the front plane starting at the under-in corner
    enum Corner { NE = 0, SE = 1, SW = 2, NW = 3 }; // clockwise cycle
    for (int ci = 0; ci < nx; ++ci) {
        auto [u_id, l_id] = a.crossing_ids[ci];
        int arcs[4];
        if (a.dir_of_id[u_id] > 0) { // over flows +y: in at NW, out at SE
            arcs[NW] = parcs[ci].in_over;
            arcs[SE] = parcs[ci].out_over;
        } else {
            arcs[SE] = parcs[ci].in_over;
            arcs[NW] = parcs[ci].out_over;
        }
        int under_in_corner;
        if (a.dir_of_id[l_id] > 0) { // under flows +y: in at SW, out at NE
            arcs[SW] = parcs[ci].in_under;
            arcs[NE] = parcs[ci].out_under;
            under_in_corner = SW;
        } else {
            arcs[NE] = parcs[ci].in_under;
            arcs[SW] = parcs[ci].out_under;
            under_in_corner = NE;
        }
        std::array<int, 4> tuple{};
        for (int i = 0; i < 4; ++i) tuple[i] = arcs[(under_in_corner + i) % 4];
        pd.crossings.push_back(tuple);
    }
    return pd;
}

} // namespace lagfill

#endif

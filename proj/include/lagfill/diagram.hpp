// Oriented link diagrams from PD codes: orientation and sign resolution,
// faces from the rotation system, Seifert circles, nesting, classification.
#ifndef LAGFILL_DIAGRAM_HPP
#define LAGFILL_DIAGRAM_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "lagfill/pd.hpp"

namespace lagfill {

// Slots per crossing, counterclockwise: 0 = under-in, 1, 2 = under-out, 3.
// Dart id = 4*crossing + slot.
struct OrientedDiagram {
    PdCode pd;
    int n = 0; // crossings

    std::vector<int> mate;      // dart -> dart carrying the same arc label
    std::vector<int> arc_at;    // dart -> arc label
    std::vector<bool> dart_in;  // dart -> arc ends here
    std::vector<int> sign;      // crossing -> +1 / -1
    std::vector<int> over_in;   // crossing -> slot (1 or 3) where the over strand enters

    int n_components = 0; // includes trivial loops
    std::vector<std::vector<int>> comp_arcs;
    std::map<int, int> comp_of_arc;
    std::map<int, int> succ; // next arc along the link

    std::vector<std::vector<int>> faces; // dart orbits of the rotation system
    std::vector<int> face_of_dart;

    int writhe = 0, c_plus = 0, c_minus = 0;

    int crossing_count() const { return n; }
    int dart(int k, int s) const { return 4 * k + s; }
    int arc(int k, int s) const { return arc_at[4 * k + s]; }

    // face id of the corner between slots s and s+1 at crossing k
    int face_of_corner(int k, int s) const { return face_of_dart[4 * k + (s + 1) % 4]; }

    bool is_knot() const { return n_components == 1; }
};

namespace detail {

struct ArcOcc {
    std::vector<int> darts;
};

inline void orient_fail(const std::string& why) {
    throw Error(ErrorKind::Validation, "inconsistent orientation: " + why);
}

} // namespace detail

// Compute orientations, signs, components, faces; validate all PdCode invariants.
inline OrientedDiagram build_diagram(const PdCode& pd) {
    OrientedDiagram d;
    d.pd = pd;
    d.n = pd.size();

    if (pd.empty()) throw Error(ErrorKind::Validation, "empty diagram");
    if (pd.trivial_loops > 0 && d.n > 0)
        throw Error(ErrorKind::Validation, "disconnected diagram (crossingless split component)");
    if (pd.trivial_loops > 1)
        throw Error(ErrorKind::Validation, "disconnected diagram (split unlink)");

    if (d.n == 0) { // 0-crossing unknot
        d.n_components = 1;
        return d;
    }

    const int nd = 4 * d.n;
    d.arc_at.resize(nd);
    std::map<int, detail::ArcOcc> occ;
    for (int k = 0; k < d.n; ++k)
        for (int s = 0; s < 4; ++s) {
            int a = pd.crossings[k][s];
            d.arc_at[4 * k + s] = a;
            occ[a].darts.push_back(4 * k + s);
        }
    for (auto& [a, o] : occ)
        if (o.darts.size() != 2)
            throw Error(ErrorKind::Validation,
                        "arc label " + std::to_string(a) + " appears " +
                            std::to_string(o.darts.size()) + " times (needs exactly 2)");

    d.mate.assign(nd, -1);
    for (auto& [a, o] : occ) {
        (void)a;
        d.mate[o.darts[0]] = o.darts[1];
        d.mate[o.darts[1]] = o.darts[0];
    }
    if (std::any_of(d.mate.begin(), d.mate.end(), [](int m) { return m < 0; }))
        detail::orient_fail("self-paired dart");

    // in/out per dart: slot0 in, slot2 out forced; over pairs (slots 1,3)
    // complementary; the two occurrences of one label complementary.
    std::vector<int> state(nd, 0); // 0 unknown, 1 in, 2 out
    std::vector<int> work;
    auto assign = [&](int dart, int st) {
        if (state[dart] == st) return;
        if (state[dart] != 0) detail::orient_fail("conflicting in/out at a crossing");
        state[dart] = st;
        work.push_back(dart);
    };
    for (int k = 0; k < d.n; ++k) {
        assign(4 * k + 0, 1);
        assign(4 * k + 2, 2);
    }
    auto propagate = [&]() {
        while (!work.empty()) {
            int e = work.back();
            work.pop_back();
            int comp = (state[e] == 1) ? 2 : 1;
            assign(d.mate[e], comp);
            int s = e % 4;
            if (s == 1 || s == 3) {
                int other = e - s + (s == 1 ? 3 : 1);
                assign(other, comp);
            }
        }
    };
    propagate();
    for (int k = 0; k < d.n; ++k) {
        if (state[4 * k + 1] != 0) continue;
        // stalled over pair: decide by label succession, wrap goes max -> min
        int b = d.arc_at[4 * k + 1], dd = d.arc_at[4 * k + 3];
        bool b_in;
        if (dd == b + 1) b_in = true;
        else if (b == dd + 1) b_in = false;
        else b_in = (b > dd);
        assign(4 * k + 1, b_in ? 1 : 2);
        propagate();
    }

    d.dart_in.resize(nd);
    for (int e = 0; e < nd; ++e) d.dart_in[e] = (state[e] == 1);
    for (int k = 0; k < d.n; ++k) {
        d.over_in.push_back(state[4 * k + 1] == 1 ? 1 : 3);
        // pinned convention: positive iff the over strand enters at slot 1
        int sg = (state[4 * k + 1] == 1) ? +1 : -1;
        d.sign.push_back(sg);
        d.writhe += sg;
        (sg > 0 ? d.c_plus : d.c_minus)++;
    }

    // successor along the link
    for (int k = 0; k < d.n; ++k) {
        d.succ[d.arc_at[4 * k + 0]] = d.arc_at[4 * k + 2];
        int oi = d.over_in[k], oo = (oi == 1) ? 3 : 1;
        d.succ[d.arc_at[4 * k + oi]] = d.arc_at[4 * k + oo];
    }
    // trace components; labels must be consecutive with a single wrap
    std::set<int> seen;
    for (auto& [a, o] : occ) {
        (void)o;
        if (seen.count(a)) continue;
        int m = a; // map iteration is ascending, so a is the component minimum
        std::vector<int> comp;
        int cur = m;
        while (true) {
            comp.push_back(cur);
            seen.insert(cur);
            int nx = d.succ.at(cur);
            if (nx == m) break;
            if (nx != cur + 1)
                detail::orient_fail("arc labels not consecutive along a component (" +
                                    std::to_string(cur) + " -> " + std::to_string(nx) + ")");
            if (seen.count(nx)) detail::orient_fail("component traversal revisits an arc");
            cur = nx;
        }
        for (int x : comp) d.comp_of_arc[x] = static_cast<int>(d.comp_arcs.size());
        d.comp_arcs.push_back(std::move(comp));
    }
    d.n_components = static_cast<int>(d.comp_arcs.size());

    // connectivity of the underlying 4-valent graph
    {
        std::vector<char> vis(d.n, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int k = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s) {
                int other = d.mate[4 * k + s] / 4;
                if (!vis[other]) {
                    vis[other] = 1;
                    ++cnt;
                    stack.push_back(other);
                }
            }
        }
        if (cnt != d.n) throw Error(ErrorKind::Validation, "disconnected diagram");
    }

    // faces: orbits of dart -> rotate(mate(dart))
    d.face_of_dart.assign(nd, -1);
    for (int e0 = 0; e0 < nd; ++e0) {
        if (d.face_of_dart[e0] >= 0) continue;
        int f = static_cast<int>(d.faces.size());
        std::vector<int> orbit;
        int e = e0;
        while (d.face_of_dart[e] < 0) {
            d.face_of_dart[e] = f;
            orbit.push_back(e);
            int m = d.mate[e];
            e = (m - m % 4) + (m % 4 + 1) % 4;
        }
        d.faces.push_back(std::move(orbit));
    }
    if (static_cast<int>(d.faces.size()) != d.n + 2)
        throw Error(ErrorKind::Validation, "non-planar rotation system (V-E+F != 2)");

    return d;
}

// Full parse: grammar plus all structural invariants.
inline PdCode parse_pd(const std::string& text) {
    PdCode pd = parse_pd_syntax(text);
    try {
        build_diagram(pd);
    } catch (const Error& e) {
        if (e.kind == ErrorKind::Validation) throw Error(ErrorKind::Parse, e.what());
        throw;
    }
    return pd;
}

struct SeifertDecomposition {
    int s = 0;
    std::vector<std::vector<int>> circles; // arc labels in smoothed traversal order
    std::map<int, int> circle_of_arc;

    struct Edge {
        int crossing;
        int u, v; // circle through slot0/slot2 strand, circle through the over strand
        int sign;
    };
    std::vector<Edge> edges;

    // plane structure (relative to a chosen outer region)
    int n_regions = 0;
    std::vector<int> region_of_face;              // face -> smoothed region id
    std::vector<int> outside_region, inside_region; // per circle
    std::vector<int> parent;                       // nesting forest, -1 root
    std::vector<int> depth;
    int outer_region = 0;

    // crossings met along each circle, in smoothed traversal order
    std::vector<std::vector<int>> circle_crossings;

    bool edge_exists(int a, int b, int want_sign) const {
        for (const auto& e : edges)
            if (((e.u == a && e.v == b) || (e.u == b && e.v == a)) && e.sign == want_sign)
                return true;
        return false;
    }
};

namespace detail {
struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};
} // namespace detail

// outer_face < 0 selects the canonical outer face (most darts, then lowest id).
inline SeifertDecomposition seifert_decompose(const OrientedDiagram& d, int outer_face = -1) {
    SeifertDecomposition sd;
    if (d.n == 0) { // 0-crossing unknot
        sd.s = 1;
        sd.circles.push_back({});
        sd.parent = {-1};
        sd.depth = {0};
        sd.outside_region = {0};
        sd.inside_region = {1};
        sd.n_regions = 2;
        sd.circle_crossings.push_back({});
        return sd;
    }

    // smoothed successor: respects orientation at each crossing
    std::map<int, int> sm;
    for (int k = 0; k < d.n; ++k) {
        int a0 = d.arc(k, 0), a1 = d.arc(k, 1), a2 = d.arc(k, 2), a3 = d.arc(k, 3);
        if (d.over_in[k] == 1) { // positive: a->d, b->c
            sm[a0] = a3;
            sm[a1] = a2;
        } else { // negative: a->b, d->c
            sm[a0] = a1;
            sm[a3] = a2;
        }
    }
    std::set<int> seen;
    for (const auto& [a, nx] : sm) {
        (void)nx;
        if (seen.count(a)) continue;
        std::vector<int> circ;
        int cur = a;
        while (!seen.count(cur)) {
            seen.insert(cur);
            circ.push_back(cur);
            cur = sm.at(cur);
        }
        int id = static_cast<int>(sd.circles.size());
        for (int x : circ) sd.circle_of_arc[x] = id;
        sd.circles.push_back(std::move(circ));
    }
    sd.s = static_cast<int>(sd.circles.size());

    for (int k = 0; k < d.n; ++k) {
        int u = sd.circle_of_arc.at(d.arc(k, 0));
        int v = sd.circle_of_arc.at(d.arc(k, 2));
        if (u == v)
            throw Error(ErrorKind::Validation, "Seifert smoothing produced a self-edge");
        sd.edges.push_back({k, u, v, d.sign[k]});
    }

    // crossings met along each circle, in smoothed traversal order
    sd.circle_crossings.assign(sd.s, {});
    {
        // arc -> crossing where that arc's smoothed transition happens
        std::map<int, int> trans;
        for (int k = 0; k < d.n; ++k) {
            trans[d.arc(k, 0)] = k;
            trans[d.arc(k, d.over_in[k])] = k;
        }
        for (int c = 0; c < sd.s; ++c)
            for (int a : sd.circles[c]) sd.circle_crossings[c].push_back(trans.at(a));
    }

    // smoothed regions: merge the two corners the smoothing opens up
    detail::UF uf(static_cast<int>(d.faces.size()));
    for (int k = 0; k < d.n; ++k) {
        if (d.sign[k] > 0) uf.unite(d.face_of_corner(k, 0), d.face_of_corner(k, 2));
        else uf.unite(d.face_of_corner(k, 1), d.face_of_corner(k, 3));
    }
    std::map<int, int> region_id;
    sd.region_of_face.assign(d.faces.size(), -1);
    for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
        int r = uf.find(f);
        if (!region_id.count(r)) region_id[r] = static_cast<int>(region_id.size());
        sd.region_of_face[f] = region_id[r];
    }
    sd.n_regions = static_cast<int>(region_id.size());
    if (sd.n_regions != sd.s + 1)
        throw Error(ErrorKind::Validation, "smoothed region count mismatch");

    // the two regions flanking each circle
    sd.outside_region.assign(sd.s, -1);
    sd.inside_region.assign(sd.s, -1);
    std::vector<std::set<int>> sides(sd.s);
    for (int k = 0; k < d.n; ++k)
        for (int s = 0; s < 4; ++s) {
            int a = d.arc(k, s);
            int c = sd.circle_of_arc.at(a);
            sides[c].insert(sd.region_of_face[d.face_of_corner(k, s)]);
            sides[c].insert(sd.region_of_face[d.face_of_corner(k, (s + 3) % 4)]);
        }
    for (int c = 0; c < sd.s; ++c)
        if (sides[c].size() != 2)
            throw Error(ErrorKind::Validation, "Seifert circle does not have two sides");

    if (outer_face < 0) {
        size_t best = 0;
        outer_face = 0;
        for (int f = 0; f < static_cast<int>(d.faces.size()); ++f)
            if (d.faces[f].size() > best) {
                best = d.faces[f].size();
                outer_face = f;
            }
    }
    sd.outer_region = sd.region_of_face[outer_face];

    // nesting forest by BFS over the region/circle incidence tree
    sd.parent.assign(sd.s, -2);
    sd.depth.assign(sd.s, -1);
    std::vector<int> region_owner(sd.n_regions, -1); // circle whose inside this region is
    std::vector<int> rq{sd.outer_region};
    std::vector<char> rvis(sd.n_regions, 0);
    rvis[sd.outer_region] = 1;
    while (!rq.empty()) {
        int r = rq.back();
        rq.pop_back();
        for (int c = 0; c < sd.s; ++c) {
            if (sd.parent[c] != -2) continue;
            auto it = sides[c].begin();
            int r1 = *it, r2 = *std::next(it);
            if (r1 != r && r2 != r) continue;
            sd.outside_region[c] = r;
            sd.inside_region[c] = (r1 == r) ? r2 : r1;
            sd.parent[c] = region_owner[r];
            sd.depth[c] = (sd.parent[c] < 0) ? 0 : sd.depth[sd.parent[c]] + 1;
            if (rvis[sd.inside_region[c]])
                throw Error(ErrorKind::Validation, "nesting structure is not a forest");
            rvis[sd.inside_region[c]] = 1;
            region_owner[sd.inside_region[c]] = c;
            rq.push_back(sd.inside_region[c]);
        }
    }
    for (int c = 0; c < sd.s; ++c)
        if (sd.parent[c] == -2)
            throw Error(ErrorKind::Validation, "nesting BFS missed a circle");

    return sd;
}

enum class Positivity { Positive, AlmostPositiveP1, AlmostPositiveP2, Other };

struct PositivityClass {
    Positivity kind = Positivity::Other;
    int neg_crossing = -1; // for almost positive
    int circle_u = -1, circle_v = -1;
};

inline const char* to_string(Positivity p) {
    switch (p) {
        case Positivity::Positive: return "Positive";
        case Positivity::AlmostPositiveP1: return "AlmostPositiveP1";
        case Positivity::AlmostPositiveP2: return "AlmostPositiveP2";
        default: return "Other";
    }
}

inline PositivityClass classify(const OrientedDiagram& d, const SeifertDecomposition& sd) {
    PositivityClass pc;
    if (d.c_minus == 0) {
        pc.kind = Positivity::Positive; // 0-crossing unknot counts as vacuously positive
        return pc;
    }
    if (d.c_minus != 1) {
        pc.kind = Positivity::Other;
        return pc;
    }
    for (const auto& e : sd.edges)
        if (e.sign < 0) {
            pc.neg_crossing = e.crossing;
            pc.circle_u = e.u;
            pc.circle_v = e.v;
        }
    pc.kind = sd.edge_exists(pc.circle_u, pc.circle_v, +1) ? Positivity::AlmostPositiveP2
                                                           : Positivity::AlmostPositiveP1;
    return pc;
}

inline PositivityClass classify(const OrientedDiagram& d) {
    if (d.c_minus == 0) {
        PositivityClass pc;
        pc.kind = Positivity::Positive;
        return pc;
    }
    return classify(d, seifert_decompose(d));
}

struct GenusInfo {
    int euler;  // chi of the Seifert surface
    int genus;  // g3(D)
};

inline GenusInfo canonical_genus(const OrientedDiagram& d, const SeifertDecomposition& sd) {
    int chi = sd.s - d.n;
    int g2 = 2 - d.n_components - chi;
    if (g2 < 0 || g2 % 2 != 0)
        throw Error(ErrorKind::Validation, "impossible Euler characteristic");
    return {chi, g2 / 2};
}

inline GenusInfo canonical_genus(const OrientedDiagram& d) {
    return canonical_genus(d, seifert_decompose(d));
}

// 2*g3(K) when the classification determines it; nullopt for Other.
inline std::optional<int> genus_estimate(const OrientedDiagram& d, const PositivityClass& cls) {
    if (!d.is_knot())
        throw Error(ErrorKind::Unsupported, "genus_estimate requires a knot diagram");
    GenusInfo gi = canonical_genus(d);
    switch (cls.kind) {
        case Positivity::Positive:
        case Positivity::AlmostPositiveP1: return 2 * gi.genus;
        case Positivity::AlmostPositiveP2: return 2 * gi.genus - 2;
        default: return std::nullopt;
    }
}

// Switch every crossing: over becomes under, rotation system unchanged.
inline PdCode mirror(const PdCode& pd) {
    OrientedDiagram d = build_diagram(pd);
    PdCode m;
    m.trivial_loops = pd.trivial_loops;
    for (int k = 0; k < d.n; ++k) {
        const auto& x = pd.crossings[k];
        if (d.over_in[k] == 1) m.crossings.push_back({x[1], x[2], x[3], x[0]});
        else m.crossings.push_back({x[3], x[0], x[1], x[2]});
    }
    return m;
}

// PD code of a braid closure; positive letters produce positive crossings.
inline PdCode braid_closure(const BraidWord& b) {
    b.validate();
    const int n = b.strands;
    const int k = static_cast<int>(b.letters.size());
    PdCode pd;
    if (k == 0) {
        pd.trivial_loops = n;
        return pd;
    }

    // ports per crossing: 0 = in-left, 1 = in-right, 2 = out-left, 3 = out-right
    auto port = [](int j, int p) { return 4 * j + p; };
    std::vector<int> down(4 * k, -1); // out-port -> in-port below (with closure wrap)
    std::vector<int> first_in(n + 1, -1), last_out(n + 1, -1);
    for (int j = 0; j < k; ++j) {
        int i = std::abs(b.letters[j]); // columns i, i+1
        for (int side = 0; side < 2; ++side) {
            int col = i + side;
            int in_p = port(j, side), out_p = port(j, 2 + side);
            if (first_in[col] < 0) first_in[col] = in_p;
            if (last_out[col] >= 0) down[last_out[col]] = in_p;
            last_out[col] = out_p;
        }
    }
    for (int col = 1; col <= n; ++col) {
        if (first_in[col] < 0) {
            pd.trivial_loops++; // untouched strand closes into a crossingless loop
            continue;
        }
        down[last_out[col]] = first_in[col];
    }

    // trace the closure, numbering arcs consecutively along each component
    std::vector<int> arc_of_inport(4 * k, 0), arc_of_outport(4 * k, 0);
    std::vector<char> in_seen(4 * k, 0);
    int next_arc = 1;
    for (int j0 = 0; j0 < k; ++j0)
        for (int p0 = 0; p0 < 2; ++p0) {
            if (in_seen[port(j0, p0)]) continue;
            int start = port(j0, p0);
            int cur = start;
            while (true) {
                in_seen[cur] = 1;
                int arc = next_arc++;
                arc_of_inport[cur] = arc;
                int j = cur / 4, side = cur % 4;          // arriving side (0 left, 1 right)
                int out_p = port(j, 2 + (1 - side));      // strands swap columns
                arc_of_outport[out_p] = arc + 1;          // provisional; fixed at wrap
                int nxt = down[out_p];
                if (nxt == start) {
                    arc_of_outport[out_p] = arc_of_inport[start];
                    break;
                }
                cur = nxt;
            }
        }
    // the provisional +1 labels are only wrong at the wrap, fixed above; the
    // in-port labels are authoritative, rebuild out-port labels from them
    for (int j = 0; j < k; ++j)
        for (int side = 0; side < 2; ++side) {
            int out_p = port(j, 2 + side);
            arc_of_outport[out_p] = arc_of_inport[down[out_p]];
        }

    for (int j = 0; j < k; ++j) {
        int IL = arc_of_inport[port(j, 0)], IR = arc_of_inport[port(j, 1)];
        int OL = arc_of_outport[port(j, 2)], OR_ = arc_of_outport[port(j, 3)];
        if (b.letters[j] > 0) pd.crossings.push_back({IR, IL, OL, OR_});
        else pd.crossings.push_back({IL, OL, OR_, IR});
    }
    return pd;
}

} // namespace lagfill

#endif

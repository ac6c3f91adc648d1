// Reidemeister moves on skein diagrams, used by the randomized invariance
// property tests. Moves operate on SkeinDiagram copies; emit_pd rebuilds a
// valid PD code afterwards.
#ifndef LAGFILL_MOVES_HPP
#define LAGFILL_MOVES_HPP

#include <random>
#include <vector>

#include "lagfill/homfly.hpp"

namespace lagfill {

inline std::vector<std::vector<int>> skein_faces(const SkeinDiagram& s) {
    std::vector<std::vector<int>> faces;
    int nd = 4 * s.n_slots();
    std::vector<int> face_of(nd, -1);
    for (int e0 = 0; e0 < nd; ++e0) {
        if (!s.alive[e0 / 4] || face_of[e0] >= 0) continue;
        std::vector<int> orbit;
        int e = e0;
        while (face_of[e] < 0) {
            face_of[e] = static_cast<int>(faces.size());
            orbit.push_back(e);
            int m = s.mate[e];
            e = (m - m % 4) + (m % 4 + 1) % 4;
        }
        faces.push_back(std::move(orbit));
    }
    return faces;
}

// Insert a kink on the arc whose outgoing dart is x. Four variants:
// chirality (positive/negative sign) times side of the strand.
inline void r1_add(SkeinDiagram& s, int x, int variant) {
    if (s.incoming[x]) x = s.mate[x]; // normalize to the outgoing dart
    int y = s.mate[x];
    int k = s.n_slots();
    for (int i = 0; i < 4; ++i) s.mate.push_back(-1);
    bool out_d1 = (variant == 0 || variant == 2);   // body exits at slot 1, else slot 3
    bool over_b = (variant == 0 || variant == 1);   // diagonal B over, else A
    int body_out = out_d1 ? 4 * k + 1 : 4 * k + 3;
    int loop_end = out_d1 ? 4 * k + 3 : 4 * k + 1;
    s.incoming.push_back(1);                         // D0 body in
    s.incoming.push_back(out_d1 ? 0 : 1);            // D1
    s.incoming.push_back(0);                         // D2 loop start
    s.incoming.push_back(out_d1 ? 1 : 0);            // D3
    s.over_diag.push_back(over_b ? 1 : 0);
    s.alive.push_back(1);
    s.n_alive++;
    s.mate[x] = 4 * k + 0;
    s.mate[4 * k + 0] = x;
    s.mate[body_out] = y;
    s.mate[y] = body_out;
    s.mate[4 * k + 2] = loop_end;
    s.mate[loop_end] = 4 * k + 2;
}

// Push the arc of face-dart e1 across the arc of face-dart e2 through their
// common face; the e1 strand passes over at both new crossings when
// first_over, under otherwise.
inline void r2_add(SkeinDiagram& s, int e1, int e2, bool first_over) {
    if (s.mate[e1] == e2 || e1 == e2)
        throw Error(ErrorKind::Validation, "r2_add needs two distinct arcs");
    // the face orbit walks with the face on its right; the construction below
    // is drawn with the face on the left, so work with the reversed arcs
    e1 = s.mate[e1];
    e2 = s.mate[e2];
    int m1 = s.mate[e1], m2 = s.mate[e2];
    // page frame: arc1 at the bottom walked left-to-right (vertex of e1 on the
    // left), arc2 at the top walked right-to-left; the shared face between.
    bool dir1 = !s.incoming[e1]; // link orientation agrees with the walk
    bool dir2 = !s.incoming[e2];
    int kL = s.n_slots(), kR = kL + 1;
    for (int i = 0; i < 8; ++i) {
        s.mate.push_back(-1);
        s.incoming.push_back(0);
    }
    s.alive.push_back(1);
    s.alive.push_back(1);
    s.n_alive += 2;
    s.over_diag.push_back(0);
    s.over_diag.push_back(0);

    // ends in CCW page order S, E, N, W for each new crossing
    // kL: finger rises; kR: finger returns down
    struct End {
        int dart;
        bool in;
    };
    auto place = [&](int k, End S, End E, End N, End W, bool finger_vertical_over) {
        // rotate so that slot 0 is the under strand's incoming end
        End page[4] = {S, E, N, W};
        // vertical strand occupies S/N (page indices 0,2), horizontal E/W
        int under_page;
        if (finger_vertical_over) under_page = E.in ? 1 : 3;
        else under_page = S.in ? 0 : 2;
        for (int i = 0; i < 4; ++i) {
            End& e = page[(under_page + i) % 4];
            int dart = 4 * k + i;
            s.mate[dart] = e.dart;
            if (e.dart >= 0) s.mate[e.dart] = dart;
            s.incoming[dart] = e.in;
        }
        s.over_diag[k] = 1; // under placed on diagonal A by the rotation
    };

    // piece darts: arc1 splits into [e1 .. kL_S], tip [kL_N .. kR_N], [kR_S .. m1]
    // arc2 splits into [e2 .. kR_E], mid [kR_W .. kL_E], [kL_W .. m2]
    // The tip and mid connections are internal; encode with placeholder -2 and
    // fix after both placements.
    // kL ends: S = lower finger piece (to e1), N = tip, E = mid, W = outer (to m2)
    // kR ends: S = lower finger piece (to m1), N = tip, E = outer (to e2), W = mid
    place(kL, {e1, dir1}, {-2, dir2}, {-3, !dir1}, {m2, !dir2}, first_over);
    place(kR, {m1, !dir1}, {e2, dir2}, {-3, dir1}, {-2, !dir2}, first_over);
    // resolve placeholders: find the darts that got -2 / -3
    int tipL = -1, tipR = -1, midL = -1, midR = -1;
    for (int k : {kL, kR})
        for (int i = 0; i < 4; ++i) {
            int dart = 4 * k + i;
            if (s.mate[dart] == -3) (k == kL ? tipL : tipR) = dart;
            if (s.mate[dart] == -2) (k == kL ? midL : midR) = dart;
        }
    s.mate[tipL] = tipR;
    s.mate[tipR] = tipL;
    s.mate[midL] = midR;
    s.mate[midR] = midL;
}

struct R3Site {
    int face = -1;
    // per strand: first/second vertex darts (in/out) and the outer mates
    struct Strand {
        int in_first, out_first, in_second, out_second;
    };
    Strand strands[3];
};

// Collect R3-movable triangular faces.
inline std::vector<R3Site> r3_sites(const SkeinDiagram& s) {
    std::vector<R3Site> sites;
    auto faces = skein_faces(s);
    for (size_t f = 0; f < faces.size(); ++f) {
        if (faces[f].size() != 3) continue;
        int ks[3] = {faces[f][0] / 4, faces[f][1] / 4, faces[f][2] / 4};
        if (ks[0] == ks[1] || ks[1] == ks[2] || ks[0] == ks[2]) continue;
        // edges of the triangle: the arcs of the three face darts
        // strand of an edge = the diagonal of its endpoint darts
        // over-count per strand to reject the cyclic pattern
        R3Site site;
        site.face = static_cast<int>(f);
        bool ok = true;
        int over_count[3] = {0, 0, 0};
        for (int i = 0; i < 3 && ok; ++i) {
            int d_out = faces[f][i]; // walk leaves this vertex along the edge
            int d_in = s.mate[d_out];
            if (d_in / 4 == d_out / 4) {
                ok = false;
                break;
            }
            // Strand i passes vertices (d_out/4) and (d_in/4) via this edge.
            int u = d_out / 4, v = d_in / 4;
            // in/out darts of the strand at each vertex
            int s_u = d_out % 4, s_v = d_in % 4;
            int other_u = 4 * u + (s_u + 2) % 4, other_v = 4 * v + (s_v + 2) % 4;
            R3Site::Strand st{};
            // the edge carries the link flow from its outgoing end to incoming
            if (!s.incoming[d_out]) {
                // flow u -> v along the edge: u is first
                st.in_first = other_u;
                st.out_first = d_out;
                st.in_second = d_in;
                st.out_second = other_v;
            } else {
                st.in_first = other_v;
                st.out_first = d_in;
                st.in_second = d_out;
                st.out_second = other_u;
            }
            site.strands[i] = st;
            if (s.over_diag[u] == s_u % 2) over_count[i]++;
            if (s.over_diag[v] == s_v % 2) over_count[i]++;
        }
        if (!ok) continue;
        if (over_count[0] == 1 && over_count[1] == 1 && over_count[2] == 1) continue; // cyclic
        sites.push_back(site);
    }
    return sites;
}

// Slide the triangle to the other side: each strand meets its two vertices in
// the opposite order afterwards. Implemented as an endpoint relabeling of the
// non-middle arcs plus fresh middle arcs, so outer arcs that happen to join
// two triangle crossings are handled correctly.
inline void r3_apply(SkeinDiagram& s, const R3Site& site) {
    std::map<int, int> phi; // old endpoint -> new endpoint
    std::set<int> middle_darts;
    for (const auto& st : site.strands) {
        phi[st.in_first] = st.in_second;
        phi[st.out_second] = st.out_first;
        middle_darts.insert(st.out_first);
        middle_darts.insert(st.in_second);
    }
    auto map_end = [&](int d) {
        auto it = phi.find(d);
        return it == phi.end() ? d : it->second;
    };
    std::vector<std::pair<int, int>> new_arcs;
    std::vector<char> seen(s.mate.size(), 0);
    for (int d = 0; d < static_cast<int>(s.mate.size()); ++d) {
        if (!s.alive[d / 4] || seen[d]) continue;
        int m = s.mate[d];
        seen[d] = seen[m] = 1;
        if (middle_darts.count(d) || middle_darts.count(m)) continue; // old middle arc
        new_arcs.push_back({map_end(d), map_end(m)});
    }
    for (const auto& st : site.strands) new_arcs.push_back({st.out_second, st.in_first});
    for (auto [a, b] : new_arcs) {
        s.mate[a] = b;
        s.mate[b] = a;
    }
}

// all kink sites (for removal)
inline std::vector<int> r1_removable(const SkeinDiagram& s) {
    std::vector<int> v;
    for (int k = 0; k < s.n_slots(); ++k)
        if (s.alive[k] && s.is_kink(k)) v.push_back(k);
    return v;
}

} // namespace lagfill

#endif

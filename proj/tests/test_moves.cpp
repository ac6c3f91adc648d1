#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lagfill/moves.hpp"
#include "lagfill/signature.hpp"
#include "support/corpus.hpp"

using namespace lagfill;
using namespace lagfill_tests;

namespace {

std::vector<int> alive_outgoing_darts(const SkeinDiagram& s) {
    std::vector<int> v;
    for (int k = 0; k < s.n_slots(); ++k)
        if (s.alive[k])
            for (int i = 0; i < 4; ++i)
                if (!s.incoming[4 * k + i]) v.push_back(4 * k + i);
    return v;
}

// apply one random admissible move; returns a short label or "" if none applied
std::string random_move(SkeinDiagram& s, std::mt19937& rng, int cap) {
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    std::vector<int> menu;
    bool can_grow1 = s.n_alive + 1 <= cap;
    bool can_grow2 = s.n_alive + 2 <= cap;
    auto kinks = r1_removable(s);
    int rk, rl;
    bool has_r2 = s.find_r2(rk, rl);
    auto tri = r3_sites(s);
    if (can_grow1 && s.n_alive > 0) menu.push_back(0);
    if (can_grow2 && s.n_alive > 0) menu.push_back(1);
    if (!kinks.empty()) menu.push_back(2);
    if (has_r2) menu.push_back(3);
    if (!tri.empty()) menu.push_back(4);
    if (menu.empty()) return "";
    switch (menu[pick(static_cast<int>(menu.size()))]) {
        case 0: {
            auto darts = alive_outgoing_darts(s);
            r1_add(s, darts[pick(static_cast<int>(darts.size()))], pick(4));
            return "r1+";
        }
        case 1: {
            auto faces = skein_faces(s);
            // gather candidate dart pairs on a common face with distinct arcs
            std::vector<std::pair<int, int>> cands;
            for (const auto& f : faces)
                for (size_t i = 0; i < f.size(); ++i)
                    for (size_t j = 0; j < f.size(); ++j) {
                        if (i == j) continue;
                        if (s.mate[f[i]] == f[j] || f[i] == f[j]) continue;
                        cands.push_back({f[i], f[j]});
                    }
            if (cands.empty()) return "";
            auto [e1, e2] = cands[pick(static_cast<int>(cands.size()))];
            r2_add(s, e1, e2, pick(2) == 0);
            return "r2+";
        }
        case 2: {
            s.remove_kink(kinks[pick(static_cast<int>(kinks.size()))]);
            return "r1-";
        }
        case 3: {
            s.remove_r2(rk, rl);
            return "r2-";
        }
        case 4: {
            r3_apply(s, tri[pick(static_cast<int>(tri.size()))]);
            return "r3";
        }
    }
    return "";
}

} // namespace

TEST_CASE("single R1 insertions preserve the polynomial and drop by R1 removal") {
    OrientedDiagram d = build_diagram(corpus_pd(right_trefoil_pd()));
    auto base = homfly(d);
    for (int variant = 0; variant < 4; ++variant) {
        SkeinDiagram s = SkeinDiagram::from(d);
        r1_add(s, 0, variant);
        PdCode pd = emit_pd(s);
        OrientedDiagram d2 = build_diagram(pd); // validates planarity
        CHECK(d2.n == 4);
        CHECK(homfly(d2) == base);
    }
}

TEST_CASE("single R2 insertions preserve the polynomial") {
    OrientedDiagram d = build_diagram(corpus_pd(right_trefoil_pd()));
    auto base = homfly(d);
    SkeinDiagram s0 = SkeinDiagram::from(d);
    auto faces = skein_faces(s0);
    int tried = 0;
    for (const auto& f : faces)
        for (size_t i = 0; i < f.size() && tried < 12; ++i)
            for (size_t j = 0; j < f.size() && tried < 12; ++j) {
                if (i == j || s0.mate[f[i]] == f[j]) continue;
                for (bool over : {true, false}) {
                    SkeinDiagram s = s0;
                    r2_add(s, f[i], f[j], over);
                    OrientedDiagram d2 = build_diagram(emit_pd(s));
                    CHECK(d2.n == 5);
                    CHECK(homfly(d2) == base);
                    ++tried;
                }
            }
    CHECK(tried >= 8);
}

TEST_CASE("R3 slides preserve the polynomial") {
    // sigma1 sigma2 sigma1 closure carries a movable triangle
    OrientedDiagram d = build_diagram(corpus_pd("braid 3: 1 2 1 2"));
    auto base = homfly(d);
    SkeinDiagram s0 = SkeinDiagram::from(d);
    auto sites = r3_sites(s0);
    REQUIRE(!sites.empty());
    for (const auto& site : sites) {
        SkeinDiagram s = s0;
        r3_apply(s, site);
        OrientedDiagram d2 = build_diagram(emit_pd(s));
        CHECK(d2.n == d.n);
        CHECK(homfly(d2) == base);
    }
}

TEST_CASE("randomized Reidemeister walk leaves HOMFLYPT and signature unchanged") {
    std::mt19937 rng(20240817);
    int total_moves = 0;
    for (const auto& [name, text] : small_corpus()) {
        PdCode pd = corpus_pd(text);
        if (pd.size() == 0 || pd.trivial_loops > 0) continue;
        OrientedDiagram d0 = build_diagram(pd);
        auto base_p = homfly(d0);
        bool knot = d0.is_knot();
        int base_sig = knot ? signature(d0) : 0;

        SkeinDiagram s = SkeinDiagram::from(d0);
        for (int step = 0; step < 24; ++step) {
            SkeinDiagram before = s;
            std::string mv = random_move(s, rng, 12);
            if (mv.empty()) break;
            if (s.free_loops > 0) { // split-off circle: outside diagram scope
                s = before;
                continue;
            }
            ++total_moves;
            INFO(name << " step " << step << " move " << mv);
            OrientedDiagram d2 = build_diagram(emit_pd(s));
            REQUIRE(homfly(d2) == base_p);
            if (knot) REQUIRE(signature(d2) == base_sig);
        }
    }
    CHECK(total_moves >= 200);
}

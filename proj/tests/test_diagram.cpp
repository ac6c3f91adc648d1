#include <catch2/catch_amalgamated.hpp>

#include "lagfill/diagram.hpp"

using namespace lagfill;

namespace {
const char* kRightTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
// standard figure-eight diagram
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

PdCode cyclic_relabel(const PdCode& pd, int comp_min, int comp_size, int shift) {
    PdCode out = pd;
    for (auto& x : out.crossings)
        for (int s = 0; s < 4; ++s) {
            int a = x[s];
            if (a >= comp_min && a < comp_min + comp_size)
                x[s] = comp_min + (a - comp_min + shift) % comp_size;
        }
    return out;
}
} // namespace

TEST_CASE("parse_pd accepts the right trefoil") {
    PdCode pd = parse_pd(kRightTrefoil);
    CHECK(pd.size() == 3);
}

TEST_CASE("parse_pd rejects the empty string") {
    CHECK_THROWS_AS(parse_pd(""), Error);
}

TEST_CASE("parse_pd accepts a one-crossing kink") {
    PdCode pd = parse_pd("X(1,1,2,2)");
    CHECK(pd.size() == 1);
    OrientedDiagram d = build_diagram(pd);
    CHECK(d.n_components == 1);
}

TEST_CASE("parse_pd rejects label multiplicity violations") {
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4)"), Error);
}

TEST_CASE("right trefoil orientation data") {
    OrientedDiagram d = build_diagram(parse_pd(kRightTrefoil));
    CHECK(d.n_components == 1);
    CHECK(d.writhe == 3);
    CHECK(d.c_plus == 3);
    CHECK(d.c_minus == 0);
}

TEST_CASE("mirror trefoil has writhe -3") {
    PdCode m = mirror(parse_pd(kRightTrefoil));
    OrientedDiagram d = build_diagram(m);
    CHECK(d.writhe == -3);
    CHECK(d.c_minus == 3);
}

TEST_CASE("0-crossing unknot via braid closure") {
    PdCode pd = braid_closure(BraidWord{1, {}});
    OrientedDiagram d = build_diagram(pd);
    CHECK(d.n_components == 1);
    CHECK(d.writhe == 0);
    SeifertDecomposition sd = seifert_decompose(d);
    CHECK(sd.s == 1);
}

TEST_CASE("Seifert circle counts") {
    // manual smoothing oracle values
    CHECK(seifert_decompose(build_diagram(parse_pd(kRightTrefoil))).s == 2);
    CHECK(seifert_decompose(build_diagram(parse_pd(kFigureEight))).s == 3);
}

TEST_CASE("Seifert structural invariants") {
    for (const char* txt : {kRightTrefoil, kFigureEight}) {
        OrientedDiagram d = build_diagram(parse_pd(txt));
        SeifertDecomposition sd = seifert_decompose(d);
        size_t total_arcs = 0;
        for (const auto& c : sd.circles) total_arcs += c.size();
        CHECK(total_arcs == static_cast<size_t>(2 * d.n));
        CHECK(sd.edges.size() == static_cast<size_t>(d.n));
    }
}

TEST_CASE("canonical genus") {
    OrientedDiagram tref = build_diagram(parse_pd(kRightTrefoil));
    GenusInfo g = canonical_genus(tref);
    CHECK(g.genus == 1); // (3-2+1)/2, cross-checked against the Seifert-matrix genus
    CHECK(g.euler == -1);
    OrientedDiagram unknot = build_diagram(braid_closure(BraidWord{1, {}}));
    CHECK(canonical_genus(unknot).genus == 0);
}

TEST_CASE("classification") {
    OrientedDiagram tref = build_diagram(parse_pd(kRightTrefoil));
    CHECK(classify(tref).kind == Positivity::Positive);
    OrientedDiagram mtref = build_diagram(mirror(parse_pd(kRightTrefoil)));
    CHECK(classify(mtref).kind == Positivity::Other);
    OrientedDiagram unknot = build_diagram(braid_closure(BraidWord{1, {}}));
    CHECK(classify(unknot).kind == Positivity::Positive);
}

TEST_CASE("classification is stable under cyclic arc relabeling") {
    PdCode pd = parse_pd(kRightTrefoil);
    for (int shift = 1; shift < 6; ++shift) {
        PdCode r = cyclic_relabel(pd, 1, 6, shift);
        OrientedDiagram d = build_diagram(r);
        CHECK(classify(d).kind == Positivity::Positive);
        CHECK(d.writhe == 3);
    }
}

TEST_CASE("genus_estimate by positivity class") {
    OrientedDiagram tref = build_diagram(parse_pd(kRightTrefoil));
    auto e = genus_estimate(tref, classify(tref));
    REQUIRE(e.has_value());
    CHECK(*e == 2);
    OrientedDiagram mtref = build_diagram(mirror(parse_pd(kRightTrefoil)));
    CHECK_FALSE(genus_estimate(mtref, classify(mtref)).has_value());
}

TEST_CASE("braid closure of a positive word") {
    PdCode pd = braid_closure(parse_braid("braid 2: 1 1 1"));
    OrientedDiagram d = build_diagram(pd);
    CHECK(d.n_components == 1);
    CHECK(d.writhe == 3);
    SeifertDecomposition sd = seifert_decompose(d);
    CHECK(sd.s == 2);
}

TEST_CASE("braid closure of the 8_19 word") {
    PdCode pd = braid_closure(parse_braid("braid 3: 1 2 1 2 1 2 1 2"));
    OrientedDiagram d = build_diagram(pd);
    CHECK(d.n_components == 1);
    CHECK(d.writhe == 8);
    CHECK(seifert_decompose(d).s == 3);
    // canonical genus of a positive braid closure: (letters - strands + 1)/2
    CHECK(canonical_genus(d).genus == 3);
}

TEST_CASE("positive braid closure genus formula") {
    for (const char* w : {"braid 2: 1 1 1", "braid 2: 1 1 1 1 1", "braid 3: 1 2 1 2 1 2 1 2"}) {
        BraidWord b = parse_braid(w);
        OrientedDiagram d = build_diagram(braid_closure(b));
        if (d.n_components != 1) continue;
        int l = static_cast<int>(b.letters.size());
        CHECK(canonical_genus(d).genus == (l - b.strands + 1) / 2);
    }
}

TEST_CASE("disconnected diagrams are rejected") {
    // braid 3: 1 1 1 closes to trefoil plus a split crossingless loop
    PdCode pd = braid_closure(parse_braid("braid 3: 1 1 1"));
    CHECK(pd.trivial_loops == 1);
    CHECK_THROWS_AS(build_diagram(pd), Error);
}

TEST_CASE("nesting forest of a braid closure is a chain") {
    OrientedDiagram d = build_diagram(braid_closure(parse_braid("braid 3: 1 2 1 2 1 2 1 2")));
    SeifertDecomposition sd = seifert_decompose(d);
    REQUIRE(sd.s == 3);
    int roots = 0;
    for (int c = 0; c < sd.s; ++c)
        if (sd.parent[c] < 0) roots++;
    CHECK(roots == 1);
    std::vector<int> depths = sd.depth;
    std::sort(depths.begin(), depths.end());
    CHECK(depths == std::vector<int>{0, 1, 2});
}

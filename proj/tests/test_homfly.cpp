#include <catch2/catch_amalgamated.hpp>

#include "lagfill/homfly.hpp"
#include "support/corpus.hpp"
#include "support/naive_homfly.hpp"

using namespace lagfill;
using namespace lagfill_tests;

namespace {
LaurentPoly2 from_triples(std::initializer_list<std::tuple<int, int, long long>> ts) {
    LaurentPoly2 p;
    for (auto [a, b, c] : ts) p.add_term(a, b, c);
    return p;
}
} // namespace

TEST_CASE("unknot evaluates to 1") {
    CHECK(homfly(corpus_pd("braid 1:")) == LaurentPoly2::constant(1));
}

TEST_CASE("right trefoil polynomial") {
    // computed by the independent brute-force resolver, frozen here
    auto expected = from_triples({{-4, 0, -1}, {-2, 0, 2}, {-2, 2, 1}});
    CHECK(naive_homfly(build_diagram(corpus_pd(right_trefoil_pd()))) == expected);
    CHECK(homfly(corpus_pd(right_trefoil_pd())) == expected);
    CHECK(homfly(corpus_pd("braid 2: 1 1 1")) == expected);
}

TEST_CASE("positive Hopf link polynomial") {
    auto expected = from_triples({{-1, 1, 1}, {-1, -1, 1}, {-3, -1, -1}});
    CHECK(homfly(corpus_pd("braid 2: 1 1")) == expected);
    CHECK(naive_homfly(build_diagram(corpus_pd("braid 2: 1 1"))) == expected);
}

TEST_CASE("kinks evaluate to 1 (R1 invariance at the base)") {
    CHECK(homfly(corpus_pd("X(1,1,2,2)")) == LaurentPoly2::constant(1));
    CHECK(homfly(corpus_pd("X(1,2,2,1)")) == LaurentPoly2::constant(1));
    // unknot presented with a reducible R2 pair
    CHECK(homfly(corpus_pd("braid 2: 1 1 -1")) == LaurentPoly2::constant(1));
    // trivial 2-braid closes to a 2-component unlink
    CHECK(homfly(corpus_pd("braid 2: 1 -1")) == HomflyEngine::delta());
}

TEST_CASE("max_deg_v examples") {
    CHECK(max_deg_v(homfly(corpus_pd("braid 1:"))) == 0);
    CHECK(max_deg_v(homfly(corpus_pd(right_trefoil_pd()))) == -2);
    CHECK(max_deg_v(homfly(mirror(corpus_pd(right_trefoil_pd())))) == 4);
}

TEST_CASE("MFW tb bound examples") {
    CHECK(mfw_tb_bound(homfly(corpus_pd("braid 1:"))) == -1);
    CHECK(mfw_tb_bound(homfly(corpus_pd(right_trefoil_pd()))) == 1);
    CHECK(mfw_tb_bound(homfly(corpus_pd("braid 3: 1 2 1 2 1 2 1 2"))) == 5); // 8_19
}

TEST_CASE("memoized engine equals the naive resolver on the whole small corpus") {
    for (const auto& [name, text] : small_corpus()) {
        INFO(name);
        OrientedDiagram d = build_diagram(corpus_pd(text));
        if (d.n > 7) continue;
        CHECK(homfly(d) == naive_homfly(d));
    }
}

TEST_CASE("mirror symmetry P(mirror D)(v,z) = P(D)(-1/v, z)") {
    for (const auto& [name, text] : small_corpus()) {
        INFO(name);
        PdCode pd = corpus_pd(text);
        if (pd.size() == 0) continue;
        CHECK(homfly(mirror(pd)) == homfly(pd).mirrored());
    }
}

TEST_CASE("figure eight is amphichiral") {
    auto p = homfly(corpus_pd(figure_eight_pd()));
    CHECK(p == p.mirrored());
    CHECK(p.coeff(0, 0) == -1); // v^-2 - 1 + v^2 - z^2
    CHECK(p.coeff(2, 0) == 1);
    CHECK(p.coeff(-2, 0) == 1);
    CHECK(p.coeff(0, 2) == -1);
}

TEST_CASE("skein relation holds at a crossing of the trefoil") {
    OrientedDiagram d = build_diagram(corpus_pd(right_trefoil_pd()));
    SkeinDiagram plus = SkeinDiagram::from(d);
    SkeinDiagram minus = plus;
    minus.switch_crossing(0);
    SkeinDiagram zero = plus;
    zero.smooth(0);
    auto pp = homfly(emit_pd(plus));
    auto pm = homfly(emit_pd(minus));
    auto pz = homfly(emit_pd(zero));
    CHECK(pp.shifted(1, 0) - pm.shifted(-1, 0) == pz.shifted(0, 1));
}

TEST_CASE("emit_pd round trip preserves the diagram") {
    for (const auto& [name, text] : small_corpus()) {
        INFO(name);
        PdCode pd = corpus_pd(text);
        if (pd.size() == 0) continue;
        OrientedDiagram d = build_diagram(pd);
        PdCode re = emit_pd(SkeinDiagram::from(d));
        OrientedDiagram d2 = build_diagram(re);
        CHECK(d2.writhe == d.writhe);
        CHECK(d2.n_components == d.n_components);
        CHECK(homfly(d2) == homfly(d));
    }
}

TEST_CASE("connected sum multiplies polynomials") {
    PdCode tref = corpus_pd(right_trefoil_pd());
    PdCode fig8 = corpus_pd(figure_eight_pd());
    PdCode sum = pd_connect_sum(tref, fig8);
    CHECK(homfly(sum) == homfly(tref) * homfly(fig8));
    PdCode granny = pd_connect_sum(tref, tref);
    CHECK(homfly(granny) == homfly(tref) * homfly(tref));
}

TEST_CASE("crossing budget is enforced") {
    PdCode big = corpus_pd("braid 2: 1 1 1 1 1");
    CHECK_THROWS_AS(homfly(big, 4), Error);
}

TEST_CASE("parallel evaluation is bit-identical to serial") {
    for (const char* text : {"braid 3: 1 2 1 2 1 2 1 2", "braid 2: 1 1 1 1 1"}) {
        HomflyEngine serial(16), par(16);
        par.parallel_top_level = true;
        PdCode pd = corpus_pd(text);
        CHECK(serial(pd) == par(pd));
    }
}

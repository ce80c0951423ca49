#include <random>

#include "doctest.h"
#include "lsft/examples.hpp"
#include "lsft/fuzz.hpp"
#include "lsft/report.hpp"

using namespace lsft;

namespace {

Poly W(const char* s) { return Poly::parse(s, Discipline::FreeWord); }

}  // namespace

TEST_SUITE("ce_dga") {

TEST_CASE("trefoil CE algebra") {
    Dga a = build_ce(parse_front(example_source("trefoil")));
    CHECK(a.disc == Discipline::FreeWord);
    CHECK(a.gens.size() == 5);
    for (int c : {0, 1, 2}) {
        CHECK(a.grading.of(Gen::q(c)) == 0);
        CHECK(a.d.at(Gen::q(c)).isZero());
    }
    CHECK(a.grading.of(Gen::q(3)) == 1);
    CHECK(a.d.at(Gen::q(3)) == W("q0*q1*q2 + q0 + q2 + 1"));
    CHECK(a.d.at(Gen::q(4)) == W("q2*q1*q0 + q0 + q2 + 1"));
    CHECK(verify_d_squared(a).ok);
    CHECK(verify_degrees(a).ok);
}

TEST_CASE("unknot CE algebra") {
    Dga a = build_ce(parse_front(example_source("unknot")));
    REQUIRE(a.gens.size() == 1);
    CHECK(a.grading.of(a.gens[0]) == 1);
    // loop disk and eye disk cancel once t = 1
    CHECK(a.d.at(a.gens[0]).isZero());
    Dga s = build_ce(parse_front("front v1\nlcusp 1\nlcusp 2\ncross 3\nrcusp 1\nrcusp 1\n"));
    CHECK(s.d.at(Gen::q(1)) == W("1"));
    CHECK(s.d.at(Gen::q(2)) == W("1"));
}

TEST_CASE("Sivek middle algebra") {
    MiddleData m = parse_middle(example_source("trefoil-middle"));
    Dga a = build_sivek_middle(m.n, m.mu);
    CHECK(a.gens.size() == 6);
    CHECK(a.d.at(Gen::alpha(1, 4)) == W("a12*a24 + a13*a34"));
    CHECK(a.d.at(Gen::alpha(1, 2)).isZero());
    CHECK(verify_d_squared(a).ok);
    CHECK(verify_degrees(a).ok);
}

TEST_CASE("Sivek split of the trefoil") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    SivekSplit s = sivek_maps(d);
    CHECK(s.AL.gens.size() == 1);
    CHECK(s.AR.d.at(Gen::q(1)) == W("a23"));
    CHECK(s.AR.d.at(Gen::q(3)) == W("a12*q1*q2 + a13*q2 + a12 + 1"));
    Report r = verify_sivek_pushout(s);
    CHECK_MESSAGE(r.ok(), report_text(r));
    DgaMorphism id = induced_map(s, s.L, s.R);
    for (Gen g : s.A.gens) CHECK(id.map.at(g) == Poly::gen(g, Discipline::FreeWord));
}

TEST_CASE("Sivek pushout on random fronts") {
    std::mt19937_64 rng(21);
    for (int k = 0; k < 20; ++k) {
        std::string s = random_front(rng, 6);
        Report r = verify_sivek_pushout(sivek_maps(parse_front(s)));
        CHECK_MESSAGE(r.ok(), std::string(s + report_text(r)));
    }
}

TEST_CASE("CE needs no dividing line but Sivek does") {
    FrontDiagram d = parse_front(example_source("trefoil-closed"));
    CHECK(build_ce(d).gens.size() == 5);
    CHECK_THROWS_AS(sivek_maps(d), DiagramError);
}

TEST_CASE("grading is invariant under orientation flip") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 10; ++k) {
        std::string s = random_front(rng, 6);
        Dga a = build_ce(parse_front(s)), b = build_ce(parse_front(s, true));
        REQUIRE(a.gens == b.gens);
        for (Gen g : a.gens) CHECK(a.grading.of(g) == b.grading.of(g));
        CHECK(verify_d_squared(b).ok);
    }
}

}

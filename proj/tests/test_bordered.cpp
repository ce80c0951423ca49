#include <algorithm>
#include <random>

#include "doctest.h"
#include "lsft/examples.hpp"
#include "lsft/fuzz.hpp"
#include "lsft/report.hpp"

using namespace lsft;

namespace {

std::string errorKind(const std::string& text) {
    try {
        build_bordered(parse_front(text));
    } catch (const DiagramError& e) {
        return e.kind;
    }
    return "";
}

// Middle data of random corpus fronts, which carry consistent potentials.
std::vector<MiddleData> corpusMiddles(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<MiddleData> out;
    for (int k = 0; k < count; ++k) {
        FrontDiagram d = parse_front(random_front(rng, 6));
        out.push_back(middle_of(d, d.divides()[0]));
    }
    return out;
}

}  // namespace

TEST_SUITE("bordered") {

TEST_CASE("trefoil bordered split") {
    BorderedSplit s = build_bordered(parse_front(example_source("trefoil")));
    CHECK(s.M.gens.size() == 16);
    CHECK(s.M.hamiltonian->size() == 6);
    CHECK(s.AL.hamiltonian->size() == 5);
    CHECK(s.AR.hamiltonian->size() == 10);
    CHECK(s.A.hamiltonian->size() == 10);
    CHECK(s.doubled.divides().size() == 2);
    CHECK(s.AL.hasT);
    CHECK_FALSE(s.AR.hasT);
    Report r = verify_bordered_suite(s);
    CHECK_MESSAGE(r.ok(), report_text(r));
    CHECK(r.checks.size() >= 12);
}

TEST_CASE("bordered errors") {
    CHECK(errorKind(example_source("trefoil-closed")) == "NoDividingLine");
    CHECK(errorKind("front v1\nlcusp 1\ndivide\nlcusp 3\ncross 2\ndivide\ncross 2\ncross 2\nrcusp 1\nrcusp 1\n") ==
          "TwoDividingLines");
    CHECK(errorKind("front v1\nlcusp 1\nlcusp 3\ncross 2\ndivide\ncross 2\nmark 1\ncross 2\nrcusp 1\nrcusp 1\n") ==
          "MarkPlacement");
    CHECK(errorKind("front v1\nlcusp 1\nlcusp 3\ncross 2\nmark 1\ndivide\ncross 2\ncross 2\nrcusp 1\nrcusp 1\n") == "");
}

TEST_CASE("middle algebra identities") {
    for (const MiddleData& m : corpusMiddles(31, 12)) {
        Dga a = build_middle_sft(m);
        Poly h2 = middle_h2(m);
        CHECK(a.hamiltonian->size() == static_cast<size_t>(m.n * (m.n - 1) / 2));
        CHECK(verify_d_squared(a).ok);
        CHECK(verify_degrees(a).ok);
        CHECK(verify_qme(a).ok);
        CHECK(verify_sft_form(a).ok);
        CHECK(verify_jacobi(a).ok);
        CHECK(verify_delta_bracket(a).ok);
        CHECK(verify_h2(a, h2).ok);
        CHECK(derive(*a.delta, *a.hamiltonian) == h2);
        Derivation s = middle_sft_part(m);
        BracketTable B;
        for (Gen g : a.gens) CHECK(s.at(g) == bracket(B, *a.hamiltonian, Poly::gen(g)));
    }
}

TEST_CASE("trivial braid two-sided algebra is the middle algebra") {
    for (const MiddleData& m : corpusMiddles(33, 12)) {
        Dga lr = build_lr_sft(trivial_piece(m), 0);
        Dga mid = build_middle_sft(m);
        REQUIRE(lr.gens.size() == mid.gens.size());
        for (Gen g : mid.gens) {
            REQUIRE(lr.has(g));
            CHECK(lr.d.at(g) == mid.d.at(g));
        }
    }
}

TEST_CASE("disconnected pairings are rejected") {
    MiddleData m;
    m.n = 4;
    m.betaL = {0, 2, 1, 4, 3};
    m.betaR = {0, 2, 1, 4, 3};
    m.mu = {0, 0, 1, 0, 1};
    CHECK_THROWS(build_middle_sft(m));
}

TEST_CASE("LR squares over several dividing lines") {
    FrontDiagram d = parse_front(
        "front v1\nlcusp 1\ndivide\nlcusp 3\ndivide\ncross 2\ndivide\ncross 2\ndivide\ncross 2\nrcusp 1\nrcusp 1\n");
    auto dv = d.divides();
    REQUIRE(dv.size() == 4);
    for (std::array<int, 4> e : {std::array<int, 4>{-1, dv[1], dv[2], -1}, std::array<int, 4>{dv[0], dv[1], dv[2], dv[3]},
                                 std::array<int, 4>{-1, dv[0], dv[3], -1}, std::array<int, 4>{dv[0], dv[2], dv[3], -1}}) {
        Report r = lr_pushout(d, e);
        CHECK_MESSAGE(r.ok(), report_text(r));
    }
    CHECK_THROWS_AS(build_lr_square(d, {-1, dv[2], dv[1], -1}), DiagramError);
}

TEST_CASE("bordered suite on random fronts") {
    std::mt19937_64 rng(55);
    for (int k = 0; k < 12; ++k) {
        std::string s = random_front(rng, 6);
        Report r = verify_bordered_suite(build_bordered(parse_front(s)));
        CHECK_MESSAGE(r.ok(), std::string(s + report_text(r)));
    }
}

}

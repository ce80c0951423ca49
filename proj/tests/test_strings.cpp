#include <algorithm>
#include <random>

#include "doctest.h"
#include "lsft/examples.hpp"
#include "lsft/strings.hpp"

using namespace lsft;

namespace {

std::vector<int> randomInvolution(std::mt19937& rng, int n) {
    std::vector<int> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = i + 1;
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<int> inv(n + 1, 0);
    for (int k = 0; k < n; k += 2) {
        inv[pts[k]] = pts[k + 1];
        inv[pts[k + 1]] = pts[k];
    }
    return inv;
}

MiddleData randomMiddle(std::mt19937& rng, int n) {
    MiddleData m;
    m.n = n;
    do {
        m.betaL = randomInvolution(rng, n);
        m.betaR = randomInvolution(rng, n);
    } while (!pairing_connectivity(m.betaL, m.betaR));
    m.mu.assign(n + 1, 0);
    return m;
}

}  // namespace

TEST_SUITE("strings") {

TEST_CASE("closed formula equals the walker on trivial braids") {
    std::mt19937 rng(42);
    int cases = 0;
    for (int n : {2, 4, 6})
        for (int k = 0; k < 7; ++k) {
            MiddleData m = randomMiddle(rng, n);
            Derivation f = delta_str_middle(m);
            Piece p = trivial_piece(m);
            Derivation w = delta_str_walker(p);
            auto gens = piece_generators(p);
            CHECK(gens.size() == static_cast<size_t>(n * (n - 1) + n));
            for (Gen g : gens) CHECK_MESSAGE(f.at(g) == w.at(g), g.str());
            ++cases;
        }
    CHECK(cases == 21);
}

TEST_CASE("trefoil middle closed formula") {
    MiddleData m = parse_middle(example_source("trefoil-middle"));
    Derivation f = delta_str_middle(m);
    CHECK(f.at(Gen::alphaL(1, 2)) == Poly::parse("bR12*aL12"));
    CHECK(f.at(Gen::alphaL(1, 3)) == Poly::parse("bR12*aL13 + bL24*aL13 + bR34*aL13 + aL12*aL23"));
    CHECK(f.at(Gen::betaL(1, 3)) == Poly::parse("bL13^2"));
}

TEST_CASE("gamma paths") {
    MiddleData m = parse_middle(example_source("trefoil-middle"));
    PathSet g = gamma_paths(m);
    CHECK(g.gamma.size() == 5);
    CHECK(g.gamma[1].empty());
    std::set<size_t> lengths;
    for (int i = 2; i <= 4; ++i) {
        REQUIRE_FALSE(g.gamma[i].empty());
        CHECK(g.gamma[i].front().tag == Tag::BetaR);
        lengths.insert(g.gamma[i].size());
    }
    CHECK(lengths == std::set<size_t>{1, 2, 3});
    MiddleData bad;
    bad.n = 4;
    bad.betaL = {0, 2, 1, 4, 3};
    bad.betaR = {0, 2, 1, 4, 3};
    bad.mu.assign(5, 0);
    CHECK_THROWS_AS(gamma_paths(bad), MathError);
}

TEST_CASE("trefoil string differential on the closed knot") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    Derivation D = delta_str_walker(d.whole);
    CHECK(piece_generators(d.whole).size() == 10);
    CHECK(D.at(Gen::q(3)) == Poly::parse("q3^2*p3"));
    CHECK(D.at(Gen::q(0)) == Poly::parse("q0*p1*q1 + q0*p2*q2"));
    CHECK(D.at(Gen::p(3)).isZero());
    CHECK(D.tLog.isZero());
}

TEST_CASE("half pieces use plain line names") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    Split s = split(d);
    auto gl = piece_generators(s.left, LineNames::plain());
    auto gr = piece_generators(s.right, LineNames::plain());
    // four line points: six alpha and two beta per side
    CHECK(gl.size() == 2 + 6 + 2);
    CHECK(gr.size() == 8 + 6 + 2);
    for (Gen g : gl) CHECK(g.side() == 0);
    CHECK_FALSE(dump_strings(s.left, LineNames::plain()).empty());
}

TEST_CASE("string differentials square to zero on the middle") {
    std::mt19937 rng(5);
    for (int n : {2, 4, 6}) {
        MiddleData m = randomMiddle(rng, n);
        Derivation f = delta_str_middle(m);
        for (auto& [g, v] : f.table) CHECK_MESSAGE(derive(f, v).isZero(), g.str());
    }
}

}

#include <random>

#include "doctest.h"
#include "lsft/algebra.hpp"

using namespace lsft;

namespace {

Poly P(const char* s) { return Poly::parse(s); }

// Random commutative polynomial in p1..p3, q1..q3 and t^{-1..1}.
Poly randomPoly(std::mt19937& rng, int terms = 4) {
    std::uniform_int_distribution<int> coin(0, 2), idx(1, 3), len(0, 3);
    Poly r;
    for (int k = 0; k < terms; ++k) {
        Monomial m = Monomial::one();
        m.t = coin(rng) - 1;
        for (int n = len(rng); n > 0; --n)
            m = m * Monomial::of(coin(rng) ? Gen::q(idx(rng)) : Gen::p(idx(rng)));
        r.toggle(m);
    }
    return r;
}

Derivation randomDerivation(std::mt19937& rng) {
    Derivation D;
    for (int c = 1; c <= 3; ++c) {
        D.table[Gen::q(c)] = randomPoly(rng, 2);
        D.table[Gen::p(c)] = randomPoly(rng, 2);
    }
    D.tLog = randomPoly(rng, 1);
    return D;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("generator names round trip") {
    for (const char* s : {"q0", "p12", "aL13", "aR24", "bL12", "bR34", "a14", "b23"})
        CHECK(Gen::parse(s).str() == s);
    CHECK(Gen::parse("a(3,11)") == Gen::alpha(3, 11));
    CHECK(Gen::alpha(3, 11).str() == "a(3,11)");
    CHECK_THROWS_AS(Gen::parse("x1"), MathError);
    CHECK_THROWS_AS(Gen::parse("aL1"), MathError);
}

TEST_CASE("parse and print") {
    Poly x = P("t*q0*q1 + p3 + 1");
    CHECK(x.size() == 3);
    CHECK(Poly::parse(x.str()) == x);
    CHECK(P("0").isZero());
    CHECK(P("q1 + q1").isZero());
    CHECK(P("t^-1*t") == Poly::one());
    CHECK(P("q1^3") == P("q1*q1*q1"));
}

TEST_CASE("commutative and free products") {
    CHECK(P("q1*q2") == P("q2*q1"));
    Poly a = Poly::parse("q1*q2", Discipline::FreeWord), b = Poly::parse("q2*q1", Discipline::FreeWord);
    CHECK(a != b);
    CHECK(abelianize(a) == abelianize(b));
    CHECK((a + b).size() == 2);
    CHECK_THROWS_AS(Poly::parse("t*q1", Discipline::FreeWord), MathError);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        Poly x = randomPoly(rng), y = randomPoly(rng), z = randomPoly(rng);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + x).isZero());
        CHECK(x * Poly::one() == x);
    }
}

TEST_CASE("substitutions") {
    CHECK(set_t_one(P("t*q1 + q1 + t^-2*p2")) == P("p2"));
    CHECK(drop_if(P("q1*p2 + q1 + p3"), [](Gen g) { return g.tag == Tag::P; }) == P("q1"));
    GenMap f{{Gen::q(1), P("q2 + 1")}, {Gen::p(1), P("t*p2")}};
    CHECK(hom_apply(f, P("q1*p1")) == P("t*q2*p2 + t*p2"));
}

TEST_CASE("derive satisfies the Leibniz rule") {
    std::mt19937 rng(11);
    for (int k = 0; k < 40; ++k) {
        Derivation D = randomDerivation(rng);
        Poly x = randomPoly(rng), y = randomPoly(rng);
        CHECK(derive(D, x * y) == derive(D, x) * y + x * derive(D, y));
        CHECK(derive(D, x + y) == derive(D, x) + derive(D, y));
    }
    Derivation D;
    D.tLog = P("q1");
    CHECK(derive(D, P("t^2")) == P("0"));
    CHECK(derive(D, P("t")) == P("t*q1"));
    CHECK(derive(D, P("t^-1")) == P("t^-1*q1"));
}

TEST_CASE("homomorphisms are multiplicative") {
    std::mt19937 rng(13);
    for (int k = 0; k < 30; ++k) {
        GenMap f;
        for (int c = 1; c <= 3; ++c) {
            f[Gen::q(c)] = randomPoly(rng, 2);
            f[Gen::p(c)] = randomPoly(rng, 2);
        }
        Poly x = randomPoly(rng), y = randomPoly(rng);
        CHECK(hom_apply(f, x * y) == hom_apply(f, x) * hom_apply(f, y));
    }
}

TEST_CASE("bracket of chords") {
    BracketTable B;
    CHECK(bracket(B, P("p1"), P("q1")) == Poly::one());
    CHECK(bracket(B, P("p1"), P("q2")).isZero());
    CHECK(bracket(B, P("p1*p2"), P("q1*q2")) == P("p2*q2 + p1*q1"));
    CHECK(bracket(B, P("p1^2"), P("q1")).isZero());
    CHECK(arrow(B, P("p1"), P("q1")) == Poly::one());
    CHECK(arrow(B, P("q1"), P("p1")).isZero());
}

TEST_CASE("bracket of line generators") {
    BracketTable B;
    CHECK(bracket(B, P("aL12"), P("aL23")) == P("aL13"));
    CHECK(bracket(B, P("aL12"), P("aR23")).isZero());
    CHECK(bracket(B, P("aR13"), P("bR34")) == P("aR13"));
    CHECK(bracket(B, P("aR13"), P("bR13")).isZero());
    CHECK(arrow(B, P("a12"), P("a23")) == P("a13"));
    CHECK(arrow(B, P("a23"), P("a12")).isZero());
}

TEST_CASE("bracket is a symmetric biderivation satisfying Jacobi") {
    std::mt19937 rng(17);
    BracketTable B;
    for (int k = 0; k < 30; ++k) {
        Poly x = randomPoly(rng, 3), y = randomPoly(rng, 3), z = randomPoly(rng, 3);
        CHECK(bracket(B, x, y) == bracket(B, y, x));
        CHECK(bracket(B, x, y * z) == bracket(B, x, y) * z + y * bracket(B, x, z));
        Poly jac = bracket(B, x, bracket(B, y, z)) + bracket(B, y, bracket(B, z, x)) + bracket(B, z, bracket(B, x, y));
        CHECK(jac.isZero());
    }
}

TEST_CASE("degrees") {
    GradingTable g;
    g.deg[Gen::q(1)] = 2;
    g.deg[Gen::p(1)] = -3;
    g.t_degree = -2;
    CHECK(degree(g, Monomial::of(Gen::q(1)) * Monomial::of(Gen::p(1)) * Monomial::tpow(1)) == -3);
    g.modulus = 2;
    CHECK(g.reduce(-3) == 1);
    CHECK_THROWS_AS(g.of(Gen::q(9)), MathError);
}

}

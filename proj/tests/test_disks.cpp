#include <algorithm>
#include <random>

#include "doctest.h"
#include "lsft/examples.hpp"
#include "lsft/fuzz.hpp"
#include "lsft/report.hpp"

using namespace lsft;

TEST_SUITE("disks") {

TEST_CASE("unknot: the eye disk cancels the loop") {
    FrontDiagram d = parse_front(example_source("unknot-closed"));
    auto rc = d.whole.rightCuspLabels();
    REQUIRE(rc.size() == 1);
    auto ds = hamiltonian_disks(d.whole);
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].corners.size() == 1);
    CHECK(ds[0].t == 1);
    CHECK(ce_disks(d.whole, rc[0]).isZero());
}

TEST_CASE("stabilized unknot has a constant differential") {
    FrontDiagram d = parse_front("front v1\nlcusp 1\nlcusp 2\ncross 3\nrcusp 1\nrcusp 1\n");
    int ones = 0;
    for (int v : d.whole.rightCuspLabels()) ones += ce_disks(d.whole, v) == Poly::one(Discipline::FreeWord);
    CHECK(ones == 2);
}

TEST_CASE("trefoil CE disks") {
    FrontDiagram d = parse_front(example_source("trefoil-closed"));
    Poly cusp = Poly::parse("q0*q1*q2 + q0 + q2 + 1");
    for (int v : d.whole.rightCuspLabels()) CHECK(abelianize(ce_disks(d.whole, v)) == cusp);
    for (int v : {0, 1, 2}) CHECK(ce_disks(d.whole, v).isZero());
}

TEST_CASE("sweep output is sorted and free of repeats") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    auto ds = hamiltonian_disks(d.whole);
    CHECK(std::is_sorted(ds.begin(), ds.end()));
    CHECK(std::adjacent_find(ds.begin(), ds.end()) == ds.end());
    for (auto& x : ds) CHECK(x.positiveCount() >= 1);
}

TEST_CASE("sweep agrees with the oracle on the trefoil") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    Check c = oracle_equivalence(d);
    CHECK_MESSAGE(c.ok, c.detail);
    DiskScope sc;
    sc.piece = &d.whole;
    CHECK(sweep_disks(sc) == oracle_disks(sc));
}

TEST_CASE("sweep agrees with the oracle on small random fronts") {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 25; ++k) {
        std::string s = random_front(rng, 4);
        Check c = oracle_equivalence(parse_front(s));
        CHECK_MESSAGE(c.ok, std::string(s + c.detail));
    }
}

TEST_CASE("trivial braid has the thin disks") {
    MiddleData m = parse_middle(example_source("trefoil-middle"));
    Piece p = trivial_piece(m);
    auto ds = hamiltonian_disks(p);
    CHECK(ds.size() == 6);
    for (auto& x : ds) {
        CHECK(x.corners.empty());
        REQUIRE(x.segments.size() == 2);
        CHECK(x.segments[0].side != x.segments[1].side);
        CHECK(x.segments[0].i == x.segments[1].i);
        CHECK(x.segments[0].j == x.segments[1].j);
    }
    DiskScope sc;
    sc.piece = &p;
    CHECK(oracle_disks(sc) == ds);
}

TEST_CASE("half disks through the trefoil line") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    Split s = split(d);
    int n = s.mid.n;
    size_t total = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            for (auto& x : half_disks(s.left, i, j, Profile::NoPositive)) {
                CHECK(x.positiveCount() == 0);
                CHECK(x.segments.size() == 1);
                ++total;
            }
            for (auto& x : half_disks(s.right, i, j, Profile::OnePositive)) CHECK(x.positiveCount() == 1);
        }
    CHECK(total > 0);
}

TEST_CASE("caps raise BudgetError") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    Caps c;
    c.maxCorners = 1;
    CHECK_THROWS_AS(hamiltonian_disks(d.whole, c), BudgetError);
    DiskScope sc;
    sc.piece = &d.whole;
    CHECK_THROWS_AS(oracle_disks(sc, 10), BudgetError);
}

TEST_CASE("disk monomials") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    SegmentTag tag = [](const Segment& s) { return Gen::alpha(s.i, s.j); };
    Poly sum;
    for (auto& x : hamiltonian_disks(d.whole)) sum.toggle(disk_monomial(x, tag));
    // h of the trefoil minus the two right cusp p terms
    CHECK(sum == Poly::parse("t*q0*q1*q2*p3 + q0*q1*q2*p4 + t*q0*p3 + t*q2*p3 + p0*p1 + p1*p2 + q0*p4 + q2*p4"));
    auto j = nlohmann::json::parse(disks_json(hamiltonian_disks(d.whole)));
    CHECK(j.size() == 8);
}

}

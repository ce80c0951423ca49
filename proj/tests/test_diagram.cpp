#include <random>

#include "doctest.h"
#include "lsft/examples.hpp"
#include "lsft/fuzz.hpp"

using namespace lsft;

namespace {

std::string errorKind(const std::string& text) {
    try {
        parse_front(text);
    } catch (const DiagramError& e) {
        return e.kind;
    }
    return "";
}

std::string middleErrorKind(const std::string& text) {
    try {
        parse_middle(text);
    } catch (const DiagramError& e) {
        return e.kind;
    }
    return "";
}

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("trefoil classical invariants") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    CHECK(d.tb == 1);
    CHECK(d.rot == 0);
    CHECK(classical_invariants(d) == std::pair{1, 0});
    CHECK(d.chordLabels().size() == 5);
    CHECK(d.divides() == std::vector<int>{3});
    CHECK(validate(d).ok);
}

TEST_CASE("unknot classical invariants") {
    FrontDiagram d = parse_front(example_source("unknot"));
    CHECK(d.tb == -1);
    CHECK(d.rot == 0);
    FrontDiagram s = parse_front("front v1\nlcusp 1\nlcusp 1\ncross 2\nrcusp 1\nrcusp 1\n");
    CHECK(s.tb == -1);
    CHECK(s.rot == 0);
    FrontDiagram z = parse_front("front v1\nlcusp 1\nlcusp 2\ncross 3\nrcusp 1\nrcusp 1\n");
    CHECK(z.tb == -3);
    CHECK(z.rot == 0);
}

TEST_CASE("semicolons and comments") {
    FrontDiagram a = parse_front("front v1; lcusp 1; rcusp 1");
    FrontDiagram b = parse_front("front v1\n# comment\nlcusp 1\n\nrcusp 1\n");
    CHECK(a.events.size() == b.events.size());
}

TEST_CASE("parse errors carry their kind") {
    CHECK(errorKind("lcusp 1\nrcusp 1") == "MalformedInput");
    CHECK(errorKind("front v1\nlcusp 1\nwiggle 2\nrcusp 1") == "MalformedInput");
    CHECK(errorKind("front v1\nlcusp 1") == "MalformedInput");
    CHECK(errorKind("front v1\nlcusp 3\nrcusp 1") == "RowOutOfRange");
    CHECK(errorKind("front v1\nlcusp 1\ncross 2\nrcusp 1") == "RowOutOfRange");
    CHECK(errorKind("front v1\nlcusp 1\nrcusp 1\nlcusp 1\nrcusp 1") == "NonSimpleFront");
    CHECK(errorKind("front v1\nlcusp 1\nlcusp 2\nrcusp 2\nrcusp 1") == "NonSimpleFront");
    CHECK(errorKind("front v1\nlcusp 1\nlcusp 3\nrcusp 1\nrcusp 1") == "MultiComponent");
    CHECK(errorKind("front v1\nlcusp 1\ncross 1 4\nlcusp 1\ncross 2 4\nrcusp 1\nrcusp 1") == "DuplicateLabel");
    CHECK(errorKind("front v1\nlcusp 1\nmark 1\nmark 2\nrcusp 1") == "MalformedInput");
    CHECK(errorKind("front v1\ndivide\nlcusp 1\nrcusp 1") == "MalformedInput");
}

TEST_CASE("front text round trip") {
    std::mt19937_64 rng(3);
    for (int k = 0; k < 30; ++k) {
        FrontDiagram d = parse_front(random_front(rng, 6));
        FrontDiagram e = parse_front(front_text(d.events, d.mark, true));
        REQUIRE(e.events.size() == d.events.size());
        for (size_t i = 0; i < d.events.size(); ++i) {
            CHECK(e.events[i].kind == d.events[i].kind);
            CHECK(e.events[i].row == d.events[i].row);
            CHECK(e.events[i].label == d.events[i].label);
        }
        CHECK(e.tb == d.tb);
        CHECK(e.rot == d.rot);
    }
}

TEST_CASE("Maslov potential and tb + rot parity") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 20; ++k) {
        FrontDiagram d = parse_front(random_front(rng, 6));
        auto mu = maslov_potential(d);
        const Piece& p = d.whole;
        int m = p.muModulus;
        auto drop = [&](int b, int row) {
            int v = mu[b][row] - mu[b][row + 1];
            return m ? ((v % m) + m) % m : v;
        };
        for (int e = 0; e < p.E(); ++e) {
            const Event& ev = p.events[e];
            if (ev.kind == EventKind::LeftCusp) CHECK(drop(e + 1, ev.row) == (m ? 1 % m : 1));
            if (ev.kind == EventKind::RightCusp) CHECK(drop(e, ev.row) == (m ? 1 % m : 1));
        }
        CHECK(((d.tb + d.rot) % 2 + 2) % 2 == 1);
    }
}

TEST_CASE("pairing connectivity") {
    CHECK(pairing_connectivity({0, 2, 1}, {0, 2, 1}));
    CHECK(pairing_connectivity({0, 3, 4, 1, 2}, {0, 2, 1, 4, 3}));
    CHECK_FALSE(pairing_connectivity({0, 2, 1, 4, 3}, {0, 2, 1, 4, 3}));
    CHECK_THROWS_AS(pairing_connectivity({0, 2, 2}, {0, 2, 1}), DiagramError);
}

TEST_CASE("middle files") {
    MiddleData m = parse_middle(example_source("trefoil-middle"));
    CHECK(m.n == 4);
    CHECK(m.betaL == std::vector<int>{0, 3, 4, 1, 2});
    CHECK(m.betaR == std::vector<int>{0, 2, 1, 4, 3});
    CHECK(parse_middle(middle_text(m)).mu == m.mu);
    CHECK(middleErrorKind("middle v1\nn 4\npairL 1 2\npairL 3 4\npairR 1 2\npairR 3 4\n") == "Disconnected");
    CHECK(middleErrorKind("middle v1\nn 3\n") == "MalformedInput");
    CHECK(middleErrorKind("middle v1\nn 2\npairL 1 5\n") == "RowOutOfRange");
    CHECK(middleErrorKind("middle v1\nn 4\npairL 1 2\npairL 2 3\n") == "NotInvolution");
    CHECK(is_middle_text("middle v1\nn 2"));
    CHECK_FALSE(is_middle_text("front v1\nlcusp 1\nrcusp 1"));
}

TEST_CASE("split of the trefoil") {
    FrontDiagram d = parse_front(example_source("trefoil"));
    Split s = split(d);
    MiddleData m = parse_middle(example_source("trefoil-middle"));
    CHECK(s.mid.n == 4);
    CHECK(s.mid.betaL == m.betaL);
    CHECK(s.mid.betaR == m.betaR);
    CHECK(s.mid.mu == m.mu);
    CHECK(s.left.rightLine);
    CHECK_FALSE(s.left.leftLine);
    CHECK(s.right.leftLine);
    CHECK(s.left.chordLabels().size() == 1);
    CHECK(s.right.chordLabels().size() == 4);
    CHECK_THROWS_AS(split(parse_front(example_source("unknot-closed"))), DiagramError);
}

TEST_CASE("random fronts are single components with one divide") {
    std::mt19937_64 a(42), b(42);
    for (int k = 0; k < 50; ++k) {
        std::string s = random_front(a, 6);
        CHECK(s == random_front(b, 6));
        FrontDiagram d = parse_front(s);
        CHECK(d.divides().size() == 1);
        CHECK(validate(d).ok);
        int crossings = 0;
        for (auto& e : d.events) crossings += e.kind == EventKind::Crossing;
        CHECK(crossings <= 6);
    }
}

TEST_CASE("knot trace visits each chord end once") {
    FrontDiagram d = parse_front(example_source("trefoil-closed"));
    KnotTrace t = trace_knot(d.whole);
    std::map<std::pair<int, int>, int> ends;
    for (auto& s : t)
        if (s.kind == Site::Chord) ++ends[{s.chord, s.sign}];
    CHECK(ends.size() == 2 * d.chordLabels().size());
    for (auto& [k, n] : ends) CHECK(n == 1);
}

}

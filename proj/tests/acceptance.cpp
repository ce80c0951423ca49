// Acceptance runner: one PASS/FAIL line per criterion.
//
//   lsft_acceptance [--known-deviations]
//
// Exit status is 0 when every criterion passes.  With --known-deviations a
// criterion whose only failures are listed in kKnown still prints FAIL, but
// does not affect the exit status.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "lsft/examples.hpp"
#include "lsft/fuzz.hpp"
#include "lsft/report.hpp"

using namespace lsft;

namespace {

const std::set<std::string> kKnown = {
    "[A^L_SFT] delta(t): expected 0, got t*b12 + t*b34",
};

struct Outcome {
    bool ok = true;
    std::vector<std::string> problems;
    std::string summary;
    void fail(const std::string& s) {
        ok = false;
        problems.push_back(s);
    }
};

std::string readData(const std::string& name) {
    std::ifstream f(std::string(LSFT_DATA_DIR) + "/" + name);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string blsftText(const BorderedSplit& s) {
    std::string out, sep;
    for (const Dga* a : {&s.A, &s.M, &s.AL, &s.AR}) {
        out += sep + dga_text(*a);
        sep = "\n";
    }
    for (const DgaMorphism* m : {&s.ell, &s.r, &s.L, &s.R}) out += sep + morphism_text(*m);
    return out;
}

void take(Outcome& o, const Report& r, const std::string& where) {
    for (auto& c : r.checks)
        if (!c.ok) o.fail(where + ": " + c.name + " -- " + c.detail);
}

void take(Outcome& o, const Check& c, const std::string& where) {
    if (!c.ok) o.fail(where + ": " + c.name + " -- " + c.detail);
}

Check arrowIdentity(const Dga& a) {
    Check c{"arrow(h,h) = delta(h) " + a.name};
    Poly lhs = arrow(BracketTable{}, *a.hamiltonian, *a.hamiltonian), rhs = derive(*a.delta, *a.hamiltonian);
    if (lhs != rhs) {
        c.ok = false;
        c.detail = (lhs + rhs).str();
    }
    return c;
}

// Identities of criterion 2 on one front with a dividing line.
Report identitySuite(const FrontDiagram& d) {
    Report r = verify_all(d);
    BorderedSplit s = build_bordered(d);
    r.add(arrowIdentity(s.AL));
    r.add(arrowIdentity(s.AR));
    return r;
}

std::vector<std::string> corpus() {
    FuzzConfig c;
    c.seed = 42;
    c.count = 100;
    c.maxCrossings = 6;
    return random_corpus(c);
}

int crossings(const FrontDiagram& d) {
    int n = 0;
    for (auto& e : d.events) n += e.kind == EventKind::Crossing;
    return n;
}

Outcome golden() {
    Outcome o;
    BorderedSplit s = build_bordered(parse_front(example_source("trefoil")));
    std::string text = blsftText(s);
    if (text != readData("trefoil_blsft.txt")) o.fail("text report differs from tests/data/trefoil_blsft.txt");
    TextTables want = parse_text_tables(readData("trefoil_expected.txt"));
    size_t rows = 0;
    for (auto& [sec, r] : want) rows += r.size();
    if (rows == 0) o.fail("transcription missing");
    for (auto& b : compare_tables(want, parse_text_tables(text))) o.fail(b);
    struct Count {
        const char* name;
        const Dga* a;
        size_t want;
    };
    for (Count c : {Count{"h", &s.A, 10}, Count{"h^M", &s.M, 6}, Count{"h^L", &s.AL, 5}, Count{"h^R", &s.AR, 10}})
        if (c.a->hamiltonian->size() != c.want)
            o.fail(std::string(c.name) + " has " + std::to_string(c.a->hamiltonian->size()) + " monomials");
    o.summary = std::to_string(rows) + " table rows, " + std::to_string(rows - o.problems.size()) + " exact";
    return o;
}

Outcome trefoilIdentities() {
    Outcome o;
    Report r = identitySuite(parse_front(example_source("trefoil")));
    take(o, r, "trefoil");
    o.summary = std::to_string(r.checks.size()) + " identities";
    return o;
}

Outcome corpusIdentities() {
    Outcome o;
    auto cs = corpus();
    auto res = run_corpus(cs, 0, identitySuite);
    size_t checks = 0;
    for (size_t k = 0; k < res.size(); ++k) {
        if (!res[k].error.empty()) o.fail("case " + std::to_string(k) + ": " + res[k].error);
        take(o, res[k].report, "case " + std::to_string(k));
        checks += res[k].report.checks.size();
    }
    o.summary = std::to_string(cs.size()) + " fronts, " + std::to_string(checks) + " identities";
    return o;
}

Outcome oracle() {
    Outcome o;
    std::vector<std::string> small;
    for (auto& f : corpus())
        if (crossings(parse_front(f)) <= 4) small.push_back(f);
    auto res = run_corpus(small, 0, [](const FrontDiagram& d) {
        Report r;
        r.add(oracle_equivalence(d));
        return r;
    });
    for (size_t k = 0; k < res.size(); ++k) {
        if (!res[k].error.empty()) o.fail("front " + std::to_string(k) + ": " + res[k].error);
        take(o, res[k].report, "front " + std::to_string(k));
    }
    o.summary = std::to_string(small.size()) + " fronts with <= 4 crossings";
    return o;
}

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

Outcome formulaVsWalker() {
    Outcome o;
    std::mt19937 rng(42);
    int cases = 0;
    const int ns[] = {2, 4, 6};
    for (int k = 0; k < 20; ++k) {
        MiddleData m;
        m.n = ns[k % 3];
        do {
            m.betaL = randomInvolution(rng, m.n);
            m.betaR = randomInvolution(rng, m.n);
        } while (!pairing_connectivity(m.betaL, m.betaR));
        m.mu.assign(m.n + 1, 0);
        Derivation f = delta_str_middle(m);
        Piece p = trivial_piece(m);
        Derivation w = delta_str_walker(p);
        for (Gen g : piece_generators(p))
            if (f.at(g) != w.at(g)) o.fail("case " + std::to_string(k) + " " + g.str());
        ++cases;
    }
    o.summary = std::to_string(cases) + " pairings";
    return o;
}

Outcome crossTheory() {
    Outcome o;
    auto cs = corpus();
    auto res = run_corpus(cs, 0, [](const FrontDiagram& d) {
        Report r;
        r.add(verify_ce_consistency(build_lsft(d), build_ce(d)));
        for (auto& c : verify_sivek_pushout(sivek_maps(d)).checks)
            if (c.name == "pushout coverage") r.add(c);
        MiddleData m = middle_of(d, d.divides()[0]);
        Dga lr = build_lr_sft(trivial_piece(m), 0), mid = build_middle_sft(m);
        Check iso{"trivial braid = A^M_SFT"};
        if (lr.gens.size() != mid.gens.size()) iso.ok = false;
        for (Gen g : mid.gens)
            if (!lr.has(g) || lr.d.at(g) != mid.d.at(g)) {
                iso.ok = false;
                iso.detail += g.str() + " ";
            }
        r.add(iso);
        return r;
    });
    for (size_t k = 0; k < res.size(); ++k) {
        if (!res[k].error.empty()) o.fail("case " + std::to_string(k) + ": " + res[k].error);
        take(o, res[k].report, "case " + std::to_string(k));
    }
    o.summary = std::to_string(cs.size()) + " fronts";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    bool allowKnown = false;
    for (int k = 1; k < argc; ++k) {
        if (!std::strcmp(argv[k], "--known-deviations")) {
            allowKnown = true;
        } else {
            std::cerr << "usage: lsft_acceptance [--known-deviations]\n";
            return 2;
        }
    }
    struct Criterion {
        int id;
        const char* title;
        double limit;
        Outcome (*fn)();
    };
    const Criterion all[] = {
        {1, "golden trefoil tables", 5, golden},
        {2, "identity suite on the trefoil", 10, trefoilIdentities},
        {3, "identity suite on the seed 42 corpus", 300, corpusIdentities},
        {4, "sweep = oracle on corpus fronts", 120, oracle},
        {5, "closed formula = walker on trivial braids", 30, formulaVsWalker},
        {6, "CE consistency, Sivek coverage, trivial braid iso", 60, crossTheory},
    };
    int status = 0;
    for (auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s");
        std::cout << "criterion " << c.id << "  " << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << o.summary << ", " << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)\n";
        bool onlyKnown = !o.ok;
        for (auto& p : o.problems) {
            bool known = kKnown.count(p) > 0;
            onlyKnown = onlyKnown && known;
            std::cout << "    " << (known ? "known deviation: " : "") << p << "\n";
        }
        if (!o.ok && !(allowKnown && onlyKnown)) status = 1;
    }
    return status;
}

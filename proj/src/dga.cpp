#include "lsft/dga.hpp"

#include <algorithm>
#include <sstream>

namespace lsft {

bool Dga::has(Gen g) const { return std::find(gens.begin(), gens.end(), g) != gens.end(); }

bool Report::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

void Report::merge(const Report& o, const std::string& prefix) {
    for (auto c : o.checks) {
        c.name = prefix + c.name;
        checks.push_back(c);
    }
    for (auto& n : o.notes) notes.push_back(prefix + n);
}

namespace {

struct Failures {
    Check c;
    int shown = 0;
    void fail(const std::string& what) {
        c.ok = false;
        if (shown++ < 4) c.detail += (c.detail.empty() ? "" : "; ") + what;
    }
};

Poly asDisc(const Poly& x, Discipline d) { return d == Discipline::Commutative ? abelianize(x) : x; }

}  // namespace

Check verify_d_squared(const Dga& a) {
    Failures f{Check{"d^2=0 " + a.name}};
    for (Gen g : a.gens) {
        Poly dd = derive(a.d, a.d.at(g));
        if (!dd.isZero()) f.fail("d^2(" + g.str() + ") = " + dd.str());
    }
    return f.c;
}

Check verify_degrees(const Dga& a) {
    Failures f{Check{"degree " + a.name}};
    for (Gen g : a.gens) {
        int want = a.grading.reduce(a.grading.of(g) - 1);
        for (auto& m : a.d.at(g).terms()) {
            int got = degree(a.grading, m);
            if (got != want)
                f.fail("|" + m.str() + "| = " + std::to_string(got) + " in d(" + g.str() + "), expected " +
                       std::to_string(want));
        }
    }
    return f.c;
}

Check verify_chain_map(const DgaMorphism& m, const Dga& source, const Dga& target) {
    Failures f{Check{"chain map " + m.name}};
    for (Gen g : source.gens) {
        Poly lhs = asDisc(derive(target.d, asDisc(m.map.at(g), target.disc)), target.disc);
        Poly rhs = m.apply(source.d.at(g), target.disc);
        if (lhs != rhs) f.fail(g.str() + ": " + (lhs + rhs).str());
    }
    return f.c;
}

Check verify_jacobi(const Dga& a, const std::string& name) {
    Failures f{Check{name + " " + a.name}};
    BracketTable B;
    std::vector<Poly> gs;
    for (Gen g : a.gens) gs.push_back(Poly::gen(g));
    size_t n = gs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j)
            for (size_t k = j; k < n; ++k) {
                const Poly &x = gs[i], &y = gs[j], &z = gs[k];
                Poly s = bracket(B, x, bracket(B, y, z)) + bracket(B, y, bracket(B, z, x)) +
                         bracket(B, z, bracket(B, x, y));
                if (!s.isZero()) f.fail(a.gens[i].str() + "," + a.gens[j].str() + "," + a.gens[k].str());
            }
    return f.c;
}

Check verify_sft_form(const Dga& a) {
    Failures f{Check{"d={h,.}+delta " + a.name}};
    if (!a.hamiltonian || !a.delta) {
        f.fail("not an SFT algebra");
        return f.c;
    }
    BracketTable B;
    for (Gen g : a.gens) {
        Poly want = bracket(B, *a.hamiltonian, Poly::gen(g)) + a.delta->at(g);
        if (want != a.d.at(g)) f.fail(g.str());
    }
    return f.c;
}

Gen retag(Gen g, const std::map<Tag, Tag>& m) {
    auto it = m.find(g.tag);
    if (it != m.end()) g.tag = it->second;
    return g;
}

Poly retag(const Poly& x, const std::map<Tag, Tag>& m) {
    GenMap id;
    for (Gen g : x.gens()) id[g] = Poly::gen(retag(g, m), x.discipline());
    return hom_apply(id, x, x.discipline());
}

void retag(Dga& a, const std::map<Tag, Tag>& m) {
    for (auto& g : a.gens) g = retag(g, m);
    auto fix = [&](Derivation& D) {
        Derivation out;
        out.disc = D.disc;
        out.tLog = retag(D.tLog, m);
        for (auto& [g, v] : D.table) out.table[retag(g, m)] = retag(v, m);
        D = out;
    };
    fix(a.d);
    if (a.delta) fix(*a.delta);
    if (a.hamiltonian) a.hamiltonian = retag(*a.hamiltonian, m);
    GradingTable gt = a.grading;
    gt.deg.clear();
    for (auto& [g, v] : a.grading.deg) gt.deg[retag(g, m)] = v;
    a.grading = gt;
}

void retag_source(DgaMorphism& f, const std::map<Tag, Tag>& m) {
    GenMap out;
    for (auto& [g, v] : f.map) out[retag(g, m)] = v;
    f.map = out;
}

void retag_target(DgaMorphism& f, const std::map<Tag, Tag>& m) {
    for (auto& [g, v] : f.map) v = retag(v, m);
}

}  // namespace lsft

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsft/algebra.hpp"

namespace lsft {

struct Dga {
    std::string name;
    Discipline disc = Discipline::Commutative;
    std::vector<Gen> gens;
    GradingTable grading;
    Derivation d;
    std::optional<Derivation> delta;  // string part, SFT algebras only
    std::optional<Poly> hamiltonian;
    bool bracket = false;
    bool hasT = false;

    bool has(Gen g) const;
};

struct DgaMorphism {
    std::string name, source, target;
    GenMap map;
    Poly apply(const Poly& x, Discipline target) const { return hom_apply(map, x, target); }
};

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;  // first counterexamples when failing
};

struct Report {
    std::string subject;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool ok() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    void merge(const Report& o, const std::string& prefix = "");
};

// d(d(g)) = 0 for every generator.
Check verify_d_squared(const Dga& a);
// Every monomial of d(g) has degree |g| - 1.
Check verify_degrees(const Dga& a);
// d_target(f(g)) = f(d_source(g)) for every source generator.
Check verify_chain_map(const DgaMorphism& f, const Dga& source, const Dga& target);
// {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = 0 on all generator triples.
Check verify_jacobi(const Dga& a, const std::string& name = "jacobi");
// d = {h,.} + delta on every generator.
Check verify_sft_form(const Dga& a);
// Rename generator tags in an algebra and in morphisms touching it.
Gen retag(Gen g, const std::map<Tag, Tag>& m);
Poly retag(const Poly& x, const std::map<Tag, Tag>& m);
void retag(Dga& a, const std::map<Tag, Tag>& m);
void retag_source(DgaMorphism& f, const std::map<Tag, Tag>& m);
void retag_target(DgaMorphism& f, const std::map<Tag, Tag>& m);

}  // namespace lsft

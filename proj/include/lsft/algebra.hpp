#pragma once

#include <compare>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsft {

struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Tag : int { Q = 0, P, AlphaL, AlphaR, BetaL, BetaR, Alpha, Beta };

struct Gen {
    Tag tag = Tag::Q;
    int i = 0;
    int j = 0;

    auto operator<=>(const Gen&) const = default;

    static Gen q(int c) { return {Tag::Q, c, 0}; }
    static Gen p(int c) { return {Tag::P, c, 0}; }
    static Gen alpha(int i, int j) { return {Tag::Alpha, i, j}; }
    static Gen beta(int i, int j) { return {Tag::Beta, i, j}; }
    static Gen alphaL(int i, int j) { return {Tag::AlphaL, i, j}; }
    static Gen alphaR(int i, int j) { return {Tag::AlphaR, i, j}; }
    static Gen betaL(int i, int j) { return {Tag::BetaL, i, j}; }
    static Gen betaR(int i, int j) { return {Tag::BetaR, i, j}; }

    bool isAlpha() const { return tag == Tag::Alpha || tag == Tag::AlphaL || tag == Tag::AlphaR; }
    bool isBeta() const { return tag == Tag::Beta || tag == Tag::BetaL || tag == Tag::BetaR; }
    bool isChord() const { return tag == Tag::Q || tag == Tag::P; }
    // 0 for unsided, 1 left, 2 right
    int side() const;

    std::string str() const;
    static Gen parse(const std::string& s);
};

enum class Discipline { Commutative, FreeWord };

struct Monomial {
    Discipline disc = Discipline::Commutative;
    std::map<Gen, int> exps;  // commutative
    int t = 0;                // commutative only
    std::vector<Gen> word;    // free

    static Monomial one(Discipline d = Discipline::Commutative) { return Monomial{d, {}, 0, {}}; }
    static Monomial of(Gen g, Discipline d = Discipline::Commutative);
    static Monomial tpow(int k);

    bool isOne() const { return exps.empty() && word.empty() && t == 0; }
    int totalDegree() const;
    int count(Gen g) const;

    Monomial operator*(const Monomial& o) const;
    bool operator==(const Monomial& o) const;
    bool operator<(const Monomial& o) const;

    std::string str() const;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(Discipline d) : disc_(d) {}
    Poly(const Monomial& m);
    static Poly zero(Discipline d = Discipline::Commutative) { return Poly(d); }
    static Poly one(Discipline d = Discipline::Commutative) { return Poly(Monomial::one(d)); }
    static Poly gen(Gen g, Discipline d = Discipline::Commutative) { return Poly(Monomial::of(g, d)); }
    static Poly t(int k = 1) { return Poly(Monomial::tpow(k)); }

    Discipline discipline() const { return disc_; }
    const std::set<Monomial>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void toggle(const Monomial& m);
    Poly& operator+=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o);
    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::set<Gen> gens() const;
    std::string str() const;
    static Poly parse(const std::string& s, Discipline d = Discipline::Commutative);

private:
    Discipline disc_ = Discipline::Commutative;
    std::set<Monomial> terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

// Forget word order: free word polys become commutative ones.
Poly abelianize(const Poly& x);
// Substitute t = 1.
Poly set_t_one(const Poly& x);
// Drop every monomial that contains a generator satisfying pred.
Poly drop_if(const Poly& x, const std::function<bool(Gen)>& pred);

using GenMap = std::map<Gen, Poly>;

struct Derivation {
    GenMap table;
    Discipline disc = Discipline::Commutative;
    Poly tLog;  // D(t) = t * tLog (commutative only)
    const Poly& at(Gen g) const;
};

Poly derive(const Derivation& D, const Poly& x);
Poly hom_apply(const GenMap& f, const Poly& x, Discipline target = Discipline::Commutative);

// Generator pair rules of the SFT bracket.  Every table here is the
// standard one: {p_c,q_c}=1 plus the alpha/beta gluing rules per side.
struct BracketTable {
    // symmetric pair value
    Poly pair(Gen a, Gen b) const;
    // a in the first slot glued to b in the second slot only
    Poly sided(Gen a, Gen b) const;
};

Poly bracket(const BracketTable& B, const Poly& x, const Poly& y);
Poly arrow(const BracketTable& B, const Poly& x, const Poly& y);

struct GradingTable {
    std::map<Gen, int> deg;
    int t_degree = 0;
    int modulus = 0;

    int reduce(int v) const;
    bool has(Gen g) const { return deg.count(g) > 0; }
    int of(Gen g) const;
};

int degree(const GradingTable& g, const Monomial& m);

}  // namespace lsft

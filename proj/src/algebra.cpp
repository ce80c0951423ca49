#include "lsft/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lsft {

int Gen::side() const {
    switch (tag) {
    case Tag::AlphaL:
    case Tag::BetaL: return 1;
    case Tag::AlphaR:
    case Tag::BetaR: return 2;
    default: return 0;
    }
}

static const char* tagName(Tag t) {
    switch (t) {
    case Tag::Q: return "q";
    case Tag::P: return "p";
    case Tag::AlphaL: return "aL";
    case Tag::AlphaR: return "aR";
    case Tag::BetaL: return "bL";
    case Tag::BetaR: return "bR";
    case Tag::Alpha: return "a";
    case Tag::Beta: return "b";
    }
    return "?";
}

std::string Gen::str() const {
    std::string s = tagName(tag);
    if (isChord()) return s + std::to_string(i);
    if (i < 10 && j < 10) return s + std::to_string(i) + std::to_string(j);
    return s + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Gen Gen::parse(const std::string& s) {
    size_t k = 0;
    while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k]))) ++k;
    std::string name = s.substr(0, k), rest = s.substr(k);
    static const std::map<std::string, Tag> names = {
        {"q", Tag::Q}, {"p", Tag::P}, {"aL", Tag::AlphaL}, {"aR", Tag::AlphaR},
        {"bL", Tag::BetaL}, {"bR", Tag::BetaR}, {"a", Tag::Alpha}, {"b", Tag::Beta}};
    auto it = names.find(name);
    if (it == names.end() || rest.empty()) throw MathError("bad generator: " + s);
    Gen g{it->second, 0, 0};
    if (g.isChord()) {
        g.i = std::stoi(rest);
        return g;
    }
    if (rest[0] == '(') {
        auto comma = rest.find(',');
        if (comma == std::string::npos || rest.back() != ')') throw MathError("bad generator: " + s);
        g.i = std::stoi(rest.substr(1, comma - 1));
        g.j = std::stoi(rest.substr(comma + 1, rest.size() - comma - 2));
    } else {
        if (rest.size() != 2) throw MathError("bad generator: " + s);
        g.i = rest[0] - '0';
        g.j = rest[1] - '0';
    }
    return g;
}

Monomial Monomial::of(Gen g, Discipline d) {
    Monomial m = one(d);
    if (d == Discipline::Commutative)
        m.exps[g] = 1;
    else
        m.word.push_back(g);
    return m;
}

Monomial Monomial::tpow(int k) {
    Monomial m = one();
    m.t = k;
    return m;
}

int Monomial::totalDegree() const {
    if (disc == Discipline::FreeWord) return static_cast<int>(word.size());
    int s = 0;
    for (auto& [g, e] : exps) s += e;
    return s;
}

int Monomial::count(Gen g) const {
    if (disc == Discipline::FreeWord) return static_cast<int>(std::count(word.begin(), word.end(), g));
    auto it = exps.find(g);
    return it == exps.end() ? 0 : it->second;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (disc != o.disc) throw MathError("DisciplineMismatch");
    Monomial r = *this;
    if (disc == Discipline::Commutative) {
        for (auto& [g, e] : o.exps) r.exps[g] += e;
        r.t += o.t;
    } else {
        r.word.insert(r.word.end(), o.word.begin(), o.word.end());
    }
    return r;
}

bool Monomial::operator==(const Monomial& o) const {
    return disc == o.disc && t == o.t && exps == o.exps && word == o.word;
}

bool Monomial::operator<(const Monomial& o) const {
    if (disc != o.disc) return disc < o.disc;
    int a = totalDegree(), b = o.totalDegree();
    if (a != b) return a > b;
    if (disc == Discipline::FreeWord) return word < o.word;
    if (exps != o.exps) return exps < o.exps;
    return t > o.t;
}

std::string Monomial::str() const {
    std::string s;
    auto add = [&](const std::string& f) {
        if (!s.empty()) s += "*";
        s += f;
    };
    if (t == 1)
        add("t");
    else if (t != 0)
        add("t^" + std::to_string(t));
    if (disc == Discipline::FreeWord) {
        for (auto& g : word) add(g.str());
    } else {
        for (auto& [g, e] : exps) add(e == 1 ? g.str() : g.str() + "^" + std::to_string(e));
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(const Monomial& m) : disc_(m.disc) { terms_.insert(m); }

void Poly::toggle(const Monomial& m) {
    if (m.disc != disc_) {
        if (!terms_.empty()) throw MathError("DisciplineMismatch");
        disc_ = m.disc;
    }
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.insert(m);
    else
        terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (!terms_.empty() && disc_ != o.disc_) throw MathError("DisciplineMismatch");
    disc_ = o.disc_;
    for (auto& m : o.terms_) toggle(m);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (!terms_.empty() && !o.terms_.empty() && disc_ != o.disc_) throw MathError("DisciplineMismatch");
    Poly r(terms_.empty() ? o.disc_ : disc_);
    for (auto& a : terms_)
        for (auto& b : o.terms_) r.toggle(a * b);
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

std::set<Gen> Poly::gens() const {
    std::set<Gen> r;
    for (auto& m : terms_) {
        for (auto& [g, e] : m.exps) r.insert(g);
        for (auto& g : m.word) r.insert(g);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& m : terms_) {
        if (!s.empty()) s += " + ";
        s += m.str();
    }
    return s;
}

Poly Poly::parse(const std::string& text, Discipline d) {
    Poly r(d);
    std::string src;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) src += c;
    if (src == "0" || src.empty()) return r;
    size_t pos = 0;
    while (pos <= src.size()) {
        size_t plus = src.find('+', pos);
        if (plus == std::string::npos) plus = src.size();
        std::string term = src.substr(pos, plus - pos);
        Monomial m = Monomial::one(d);
        size_t q = 0;
        while (q < term.size()) {
            size_t star = term.find('*', q);
            if (star == std::string::npos) star = term.size();
            std::string f = term.substr(q, star - q);
            q = star + 1;
            if (f == "1") continue;
            int e = 1;
            auto caret = f.find('^');
            if (caret != std::string::npos) {
                e = std::stoi(f.substr(caret + 1));
                f = f.substr(0, caret);
            }
            if (f == "t") {
                if (d == Discipline::FreeWord) throw MathError("t in free word");
                m.t += e;
                continue;
            }
            Gen g = Gen::parse(f);
            for (int k = 0; k < e; ++k) m = m * Monomial::of(g, d);
        }
        r.toggle(m);
        pos = plus + 1;
    }
    return r;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }
Poly poly_mul(const Poly& a, const Poly& b) { return a * b; }

Poly abelianize(const Poly& x) {
    Poly r;
    for (auto& m : x.terms()) {
        Monomial a = Monomial::one();
        a.t = m.t;
        for (auto& [g, e] : m.exps) a.exps[g] += e;
        for (auto& g : m.word) a.exps[g] += 1;
        r.toggle(a);
    }
    return r;
}

Poly set_t_one(const Poly& x) {
    Poly r(x.discipline());
    for (auto m : x.terms()) {
        m.t = 0;
        r.toggle(m);
    }
    return r;
}

Poly drop_if(const Poly& x, const std::function<bool(Gen)>& pred) {
    Poly r(x.discipline());
    for (auto& m : x.terms()) {
        bool hit = false;
        for (auto& [g, e] : m.exps) hit = hit || pred(g);
        for (auto& g : m.word) hit = hit || pred(g);
        if (!hit) r.toggle(m);
    }
    return r;
}

const Poly& Derivation::at(Gen g) const {
    auto it = table.find(g);
    if (it == table.end()) throw MathError("UnknownGenerator " + g.str());
    return it->second;
}

Poly derive(const Derivation& D, const Poly& x) {
    Poly r(x.discipline());
    for (auto& m : x.terms()) {
        if (m.disc == Discipline::FreeWord) {
            for (size_t k = 0; k < m.word.size(); ++k) {
                Monomial pre = Monomial::one(Discipline::FreeWord), post = pre;
                pre.word.assign(m.word.begin(), m.word.begin() + k);
                post.word.assign(m.word.begin() + k + 1, m.word.end());
                Poly dg = D.at(m.word[k]);
                if (dg.isZero()) continue;
                r += Poly(pre) * dg * Poly(post);
            }
        } else {
            if (m.t % 2 != 0 && !D.tLog.isZero()) r += D.tLog * Poly(m);
            for (auto& [g, e] : m.exps) {
                if (e % 2 == 0) {
                    D.at(g);
                    continue;
                }
                Poly dg = D.at(g);
                if (dg.isZero()) continue;
                Monomial rest = m;
                if (--rest.exps[g] == 0) rest.exps.erase(g);
                r += dg * Poly(rest);
            }
        }
    }
    return r;
}

Poly hom_apply(const GenMap& f, const Poly& x, Discipline target) {
    Poly r(target);
    for (auto& m : x.terms()) {
        Poly img = Poly::one(target);
        if (m.t != 0) img = Poly::t(m.t);
        auto apply = [&](Gen g) {
            auto it = f.find(g);
            if (it == f.end()) throw MathError("UnknownGenerator " + g.str());
            img *= it->second;
        };
        for (auto& [g, e] : m.exps)
            for (int k = 0; k < e; ++k) apply(g);
        for (auto& g : m.word) apply(g);
        r += img;
    }
    return r;
}

static Gen sameSideAlpha(Gen like, int i, int j) { return Gen{like.tag, i, j}; }

Poly BracketTable::pair(Gen a, Gen b) const {
    if (a.tag == Tag::P && b.tag == Tag::Q && a.i == b.i) return Poly::one();
    if (a.tag == Tag::Q && b.tag == Tag::P && a.i == b.i) return Poly::one();
    if (a.side() != b.side()) return Poly();
    if (a.isAlpha() && b.isAlpha()) {
        if (a.j == b.i) return Poly::gen(sameSideAlpha(a, a.i, b.j));
        if (a.i == b.j) return Poly::gen(sameSideAlpha(a, b.i, a.j));
        return Poly();
    }
    if (a.isAlpha() && b.isBeta()) {
        int shared = (a.i == b.i || a.i == b.j) + (a.j == b.i || a.j == b.j);
        return shared == 1 ? Poly::gen(a) : Poly();
    }
    if (a.isBeta() && b.isAlpha()) return pair(b, a);
    return Poly();
}

Poly BracketTable::sided(Gen a, Gen b) const {
    if (a.tag == Tag::P && b.tag == Tag::Q && a.i == b.i) return Poly::one();
    if (a.isAlpha() && b.isAlpha() && a.side() == b.side() && a.j == b.i)
        return Poly::gen(sameSideAlpha(a, a.i, b.j));
    return Poly();
}

static Poly biderivation(const std::function<Poly(Gen, Gen)>& rule, const Poly& x, const Poly& y) {
    Poly r;
    for (auto& a : x.terms()) {
        if (a.disc != Discipline::Commutative) throw MathError("DisciplineMismatch");
        for (auto& b : y.terms()) {
            if (b.disc != Discipline::Commutative) throw MathError("DisciplineMismatch");
            for (auto& [g, e] : a.exps) {
                if (e % 2 == 0) continue;
                for (auto& [h, f] : b.exps) {
                    if (f % 2 == 0) continue;
                    Poly v = rule(g, h);
                    if (v.isZero()) continue;
                    Monomial ra = a, rb = b;
                    if (--ra.exps[g] == 0) ra.exps.erase(g);
                    if (--rb.exps[h] == 0) rb.exps.erase(h);
                    r += v * Poly(ra * rb);
                }
            }
        }
    }
    return r;
}

Poly bracket(const BracketTable& B, const Poly& x, const Poly& y) {
    return biderivation([&](Gen g, Gen h) { return B.pair(g, h); }, x, y);
}

Poly arrow(const BracketTable& B, const Poly& x, const Poly& y) {
    return biderivation([&](Gen g, Gen h) { return B.sided(g, h); }, x, y);
}

int GradingTable::reduce(int v) const {
    if (modulus == 0) return v;
    int r = v % modulus;
    return r < 0 ? r + modulus : r;
}

int GradingTable::of(Gen g) const {
    auto it = deg.find(g);
    if (it == deg.end()) throw MathError("UngradedGenerator " + g.str());
    return it->second;
}

int degree(const GradingTable& g, const Monomial& m) {
    int s = m.t * g.t_degree;
    for (auto& [x, e] : m.exps) s += e * g.of(x);
    for (auto& x : m.word) s += g.of(x);
    return g.reduce(s);
}

}  // namespace lsft

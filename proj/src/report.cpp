#include "lsft/report.hpp"

#include <sstream>

namespace lsft {

namespace {

std::string tagOf(Gen g) {
    std::string s = g.str();
    size_t k = 0;
    while (k < s.size() && std::isalpha(static_cast<unsigned char>(s[k]))) ++k;
    return s.substr(0, k);
}

Gen genOf(const std::string& tag, int i, int j) {
    Gen g = Gen::parse(tag == "q" || tag == "p" ? tag + "1" : tag + "12");
    g.i = i;
    g.j = g.isChord() ? 0 : j;
    return g;
}

json genJson(Gen g) { return json::array({tagOf(g), g.i, g.j}); }
Gen genFromJson(const json& j) { return genOf(j.at(0).get<std::string>(), j.at(1).get<int>(), j.at(2).get<int>()); }

std::string discName(Discipline d) { return d == Discipline::FreeWord ? "free" : "commutative"; }
Discipline discOf(const std::string& s) {
    if (s == "free") return Discipline::FreeWord;
    if (s == "commutative") return Discipline::Commutative;
    throw MathError("unknown discipline " + s);
}

json tableJson(const GenMap& m) {
    json j = json::object();
    for (auto& [g, v] : m) j[g.str()] = poly_to_json(v);
    return j;
}

GenMap tableFromJson(const json& j, Discipline d) {
    GenMap m;
    for (auto& [k, v] : j.items()) m[Gen::parse(k)] = poly_from_json(v, d);
    return m;
}

bool sameDerivation(const Derivation& a, const Derivation& b, const std::vector<Gen>& gens) {
    for (Gen g : gens)
        if (a.at(g) != b.at(g)) return false;
    return a.tLog == b.tLog;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

json poly_to_json(const Poly& x) {
    json arr = json::array();
    for (auto& m : x.terms()) {
        json gs = json::array();
        if (m.disc == Discipline::FreeWord) {
            for (Gen g : m.word) {
                json e = genJson(g);
                e.push_back(1);
                gs.push_back(e);
            }
        } else {
            for (auto& [g, k] : m.exps) {
                json e = genJson(g);
                e.push_back(k);
                gs.push_back(e);
            }
        }
        arr.push_back({{"t", m.t}, {"gens", gs}});
    }
    return arr;
}

Poly poly_from_json(const json& j, Discipline d) {
    Poly r(d);
    for (auto& mj : j) {
        Monomial m = Monomial::one(d);
        int t = mj.at("t").get<int>();
        if (t != 0) {
            if (d == Discipline::FreeWord) throw MathError("t in free word");
            m.t = t;
        }
        for (auto& e : mj.at("gens")) {
            Gen g = genFromJson(e);
            int k = e.at(3).get<int>();
            for (int n = 0; n < k; ++n) m = m * Monomial::of(g, d);
        }
        r.toggle(m);
    }
    return r;
}

json dga_to_json(const Dga& a) {
    json j;
    j["algebra"] = a.name;
    j["discipline"] = discName(a.disc);
    j["modulus"] = a.grading.modulus;
    j["bracket"] = a.bracket;
    j["t"] = a.hasT;
    if (a.hasT) j["t_degree"] = a.grading.t_degree;
    json gs = json::array();
    for (Gen g : a.gens) gs.push_back({{"id", g.str()}, {"degree", a.grading.of(g)}});
    j["generators"] = gs;
    GenMap d;
    for (Gen g : a.gens) d[g] = a.d.at(g);
    j["differential"] = tableJson(d);
    j["differential_t"] = poly_to_json(a.d.tLog);
    if (a.delta) {
        GenMap m;
        for (Gen g : a.gens) m[g] = a.delta->at(g);
        j["delta"] = tableJson(m);
        j["delta_t"] = poly_to_json(a.delta->tLog);
    }
    if (a.hamiltonian) j["h"] = poly_to_json(*a.hamiltonian);
    return j;
}

Dga dga_from_json(const json& j) {
    Dga a;
    a.name = j.at("algebra").get<std::string>();
    a.disc = discOf(j.at("discipline").get<std::string>());
    a.d.disc = a.disc;
    a.grading.modulus = j.value("modulus", 0);
    a.bracket = j.value("bracket", false);
    a.hasT = j.value("t", false);
    a.grading.t_degree = j.value("t_degree", 0);
    for (auto& g : j.at("generators")) {
        Gen x = Gen::parse(g.at("id").get<std::string>());
        a.gens.push_back(x);
        a.grading.deg[x] = g.at("degree").get<int>();
    }
    a.d.table = tableFromJson(j.at("differential"), a.disc);
    if (j.contains("differential_t")) a.d.tLog = poly_from_json(j["differential_t"], a.disc);
    if (j.contains("delta")) {
        Derivation D;
        D.disc = a.disc;
        D.table = tableFromJson(j["delta"], a.disc);
        if (j.contains("delta_t")) D.tLog = poly_from_json(j["delta_t"], a.disc);
        a.delta = D;
    }
    if (j.contains("h")) a.hamiltonian = poly_from_json(j["h"], a.disc);
    return a;
}

json morphism_to_json(const DgaMorphism& m) {
    Discipline d = Discipline::Commutative;
    for (auto& [g, v] : m.map) d = v.discipline();
    return {{"name", m.name},
            {"source", m.source},
            {"target", m.target},
            {"discipline", discName(d)},
            {"map", tableJson(m.map)}};
}

DgaMorphism morphism_from_json(const json& j) {
    DgaMorphism m;
    m.name = j.at("name").get<std::string>();
    m.source = j.at("source").get<std::string>();
    m.target = j.at("target").get<std::string>();
    m.map = tableFromJson(j.at("map"), discOf(j.value("discipline", "commutative")));
    return m;
}

json report_to_json(const Report& r) {
    json cs = json::array();
    for (auto& c : r.checks) cs.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    return {{"subject", r.subject}, {"ok", r.ok()}, {"checks", cs}, {"notes", r.notes}};
}

Report report_from_json(const json& j) {
    Report r;
    r.subject = j.at("subject").get<std::string>();
    for (auto& c : j.at("checks"))
        r.checks.push_back(Check{c.at("name").get<std::string>(), c.at("ok").get<bool>(), c.value("detail", "")});
    r.notes = j.value("notes", std::vector<std::string>{});
    return r;
}

bool same_dga(const Dga& a, const Dga& b) {
    if (a.name != b.name || a.disc != b.disc || a.gens != b.gens || a.hasT != b.hasT || a.bracket != b.bracket)
        return false;
    if (a.grading.modulus != b.grading.modulus) return false;
    if (a.hasT && a.grading.t_degree != b.grading.t_degree) return false;
    for (Gen g : a.gens)
        if (a.grading.of(g) != b.grading.of(g)) return false;
    if (!sameDerivation(a.d, b.d, a.gens)) return false;
    if (a.delta.has_value() != b.delta.has_value()) return false;
    if (a.delta && !sameDerivation(*a.delta, *b.delta, a.gens)) return false;
    return a.hamiltonian == b.hamiltonian;
}

bool same_morphism(const DgaMorphism& a, const DgaMorphism& b) {
    return a.name == b.name && a.source == b.source && a.target == b.target && a.map == b.map;
}

std::string dga_text(const Dga& a) {
    std::ostringstream os;
    os << "[" << a.name << "]\n";
    os << "discipline = " << discName(a.disc) << "\n";
    os << "modulus = " << a.grading.modulus << "\n";
    if (a.hasT) os << "deg(t) = " << a.grading.t_degree << "\n";
    for (Gen g : a.gens) os << "deg(" << g.str() << ") = " << a.grading.of(g) << "\n";
    if (a.delta) {
        for (Gen g : a.gens) {
            os << "delta(" << g.str() << ") = " << a.delta->at(g).str() << "\n";
            os << "d_SFT(" << g.str() << ") = " << (a.d.at(g) + a.delta->at(g)).str() << "\n";
        }
        if (a.hasT) {
            os << "delta(t) = " << (Poly::t() * a.delta->tLog).str() << "\n";
            os << "d_SFT(t) = " << (Poly::t() * (a.d.tLog + a.delta->tLog)).str() << "\n";
        }
    } else {
        for (Gen g : a.gens) os << "d(" << g.str() << ") = " << a.d.at(g).str() << "\n";
    }
    if (a.hamiltonian) os << "h = " << a.hamiltonian->str() << "\n";
    return os.str();
}

std::string morphism_text(const DgaMorphism& m) {
    std::ostringstream os;
    os << "[" << m.name << "]\n";
    os << "source = " << m.source << "\n";
    os << "target = " << m.target << "\n";
    for (auto& [g, v] : m.map) os << m.name << "(" << g.str() << ") = " << v.str() << "\n";
    return os.str();
}

std::string report_text(const Report& r) {
    std::ostringstream os;
    os << "[checks: " << r.subject << "]\n";
    for (auto& c : r.checks) {
        os << (c.ok ? "pass  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) os << "  -- " << c.detail;
        os << "\n";
    }
    for (auto& n : r.notes) os << "note  " << n << "\n";
    os << "result = " << (r.ok() ? "pass" : "FAIL") << "\n";
    return os.str();
}

TextTables parse_text_tables(const std::string& text) {
    TextTables out;
    std::istringstream is(text);
    std::string line, section;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            section = line.substr(1, line.size() - 2);
            out[section];
            continue;
        }
        auto eq = line.find(" = ");
        if (eq == std::string::npos) continue;
        out[section][trim(line.substr(0, eq))] = trim(line.substr(eq + 3));
    }
    return out;
}

std::vector<std::string> compare_tables(const TextTables& want, const TextTables& got) {
    std::vector<std::string> bad;
    for (auto& [sec, rows] : want) {
        auto s = got.find(sec);
        if (s == got.end()) {
            bad.push_back("[" + sec + "] missing");
            continue;
        }
        Discipline d = Discipline::Commutative;
        auto dz = s->second.find("discipline");
        if (dz != s->second.end() && dz->second == "free") d = Discipline::FreeWord;
        for (auto& [key, val] : rows) {
            auto r = s->second.find(key);
            if (r == s->second.end()) {
                bad.push_back("[" + sec + "] " + key + " missing");
                continue;
            }
            bool same;
            if (key.rfind("deg", 0) == 0 || key == "modulus" || key == "discipline" || key == "source" ||
                key == "target")
                same = val == r->second;
            else
                same = Poly::parse(val, d) == Poly::parse(r->second, d);
            if (!same) bad.push_back("[" + sec + "] " + key + ": expected " + val + ", got " + r->second);
        }
    }
    return bad;
}

}  // namespace lsft

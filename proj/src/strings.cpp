#include "lsft/strings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lsft {

Gen LineNames::alpha(int side, int i, int j) const { return Gen{side == 1 ? alphaLeft : alphaRight, i, j}; }
Gen LineNames::beta(int side, int i, int j) const {
    return Gen{side == 1 ? betaLeft : betaRight, std::min(i, j), std::max(i, j)};
}

std::string BrokenString::str() const {
    std::ostringstream os;
    os << gen.str() << ": " << trace_str(sites);
    if (extraPass) os << " (+R" << chord << ")";
    if (side) os << " [M " << (side == 1 ? "L" : "R") << i << "," << j << "]";
    if (basePointPasses) os << " [*x" << basePointPasses << "]";
    return os.str();
}

namespace {

int alphaSide(Gen g, const Piece& p, const LineNames& names) {
    if (names.alphaLeft != names.alphaRight) return g.tag == names.alphaLeft ? 1 : 2;
    return p.leftLine ? 1 : 2;
}

int findPoint(const KnotTrace& tr, int side, int i) {
    for (size_t k = 0; k < tr.size(); ++k)
        if (tr[k].kind == Site::Point && tr[k].side == side && tr[k].i == i) return static_cast<int>(k);
    throw NotRepresentable("no line point " + std::to_string(i));
}

int findChordEnd(const KnotTrace& tr, int c, int sign) {
    for (size_t k = 0; k < tr.size(); ++k)
        if (tr[k].kind == Site::Chord && tr[k].chord == c && tr[k].sign == sign) return static_cast<int>(k);
    throw NotRepresentable("chord " + std::to_string(c) + " is not in the piece");
}

}  // namespace

BrokenString string_for(Gen g, const Piece& p, const LineNames& names) {
    BrokenString s;
    s.gen = g;
    if (g.isBeta()) throw NotRepresentable("beta generators have no string representative");
    KnotTrace tr = trace_knot(p);
    if (g.tag == Tag::Q || g.tag == Tag::P) {
        int plus = findChordEnd(tr, g.i, +1), minus = findChordEnd(tr, g.i, -1);
        int a = g.tag == Tag::P ? plus : minus, b = g.tag == Tag::P ? minus : plus;
        s.sites.assign(tr.begin() + std::min(a, b), tr.begin() + std::max(a, b));
        s.chord = g.i;
        // leave the chord turning left from the arrival heading
        int arrival = tr[a].heading, departure = (tr[b].heading + 180) % 360;
        s.extraPass = departure != (arrival + 90) % 360;
        return s;
    }
    if (g.isAlpha()) {
        int side = alphaSide(g, p, names);
        int a = findPoint(tr, side, g.i), b = findPoint(tr, side, g.j);
        s.sites.assign(tr.begin() + std::min(a, b), tr.begin() + std::max(a, b));
        s.side = side;
        s.i = g.i;
        s.j = g.j;
        return s;
    }
    throw NotRepresentable("generator " + g.str() + " has no string in this piece");
}

Poly insertions(const BrokenString& s, const Piece& p, const LineNames& names) {
    (void)p;
    std::map<int, int> chords;
    std::map<Gen, int> jumps;
    for (auto& x : s.sites) {
        if (x.kind == Site::Chord) ++chords[x.chord];
        if (x.kind == Site::Jump) ++jumps[names.beta(x.side, x.i, x.j)];
    }
    if (s.extraPass) ++chords[s.chord];
    Poly factor;
    for (auto [c, n] : chords)
        if (n % 2) factor += Poly::gen(Gen::p(c)) * Poly::gen(Gen::q(c));
    for (auto& [b, n] : jumps)
        if (n % 2) factor += Poly::gen(b);
    Poly out = Poly::gen(s.gen) * factor;
    if (s.side)
        for (int k = s.i + 1; k < s.j; ++k)
            out += Poly::gen(names.alpha(s.side, s.i, k)) * Poly::gen(names.alpha(s.side, k, s.j));
    return out;
}

Poly PathSet::sum(int i) const {
    Poly r;
    for (auto& b : gamma.at(i)) r += Poly::gen(b);
    return r;
}

PathSet gamma_paths(const MiddleData& mid) {
    PathSet ps;
    int n = mid.n;
    ps.gamma.assign(n + 1, {});
    if (n == 0) return ps;
    std::vector<char> seen(n + 1, 0);
    seen[1] = 1;
    std::vector<Gen> path;
    int cur = 1;
    bool right = true;
    for (int steps = 1; steps < n; ++steps) {
        int nxt = right ? mid.betaR.at(cur) : mid.betaL.at(cur);
        path.push_back(right ? Gen::betaR(std::min(cur, nxt), std::max(cur, nxt))
                             : Gen::betaL(std::min(cur, nxt), std::max(cur, nxt)));
        if (nxt < 1 || nxt > n || seen[nxt]) throw MathError("Disconnected: pairings do not form one loop");
        seen[nxt] = 1;
        ps.gamma[nxt] = path;
        cur = nxt;
        right = !right;
    }
    int back = right ? mid.betaR.at(cur) : mid.betaL.at(cur);
    if (back != 1) throw MathError("Disconnected: pairings do not form one loop");
    return ps;
}

std::vector<Gen> piece_generators(const Piece& p, const LineNames& names) {
    std::vector<Gen> gs;
    for (int c : p.chordLabels()) {
        gs.push_back(Gen::q(c));
        gs.push_back(Gen::p(c));
    }
    auto line = [&](int side, int n, const std::vector<int>& pair) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) gs.push_back(names.alpha(side, i, j));
        for (int i = 1; i <= n; ++i)
            if (i < pair.at(i)) gs.push_back(names.beta(side, i, pair[i]));
    };
    if (p.leftLine) line(1, p.nLeft(), p.pairL);
    if (p.rightLine) line(2, p.nRight(), p.pairR);
    return gs;
}

Derivation delta_str_walker(const Piece& p, const LineNames& names) {
    Derivation D;
    for (Gen g : piece_generators(p, names)) {
        if (g.isBeta()) {
            Poly b = Poly::gen(g);
            D.table[g] = b * b;
            continue;
        }
        D.table[g] = insertions(string_for(g, p, names), p, names);
    }
    // the loop through the mark breaks at every line jump
    if (p.mark)
        for (const Site& s : trace_knot(p))
            if (s.kind == Site::Jump) D.tLog += Poly::gen(names.beta(s.side, s.i, s.j));
    return D;
}

Derivation delta_str_middle(const MiddleData& mid) {
    Derivation D;
    PathSet ps = gamma_paths(mid);
    int n = mid.n;
    for (Tag tag : {Tag::AlphaL, Tag::AlphaR})
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Gen a{tag, i, j};
                Poly v = (ps.sum(i) + ps.sum(j)) * Poly::gen(a);
                for (int k = i + 1; k < j; ++k) v += Poly::gen(Gen{tag, i, k}) * Poly::gen(Gen{tag, k, j});
                D.table[a] = v;
            }
    for (int i = 1; i <= n; ++i) {
        if (i < mid.betaL.at(i)) {
            Poly b = Poly::gen(Gen::betaL(i, mid.betaL[i]));
            D.table[Gen::betaL(i, mid.betaL[i])] = b * b;
        }
        if (i < mid.betaR.at(i)) {
            Poly b = Poly::gen(Gen::betaR(i, mid.betaR[i]));
            D.table[Gen::betaR(i, mid.betaR[i])] = b * b;
        }
    }
    return D;
}

std::string dump_strings(const Piece& p, const LineNames& names) {
    std::ostringstream os;
    os << "trace: " << trace_str(trace_knot(p)) << "\n";
    for (Gen g : piece_generators(p, names)) {
        if (g.isBeta()) continue;
        os << string_for(g, p, names).str() << "\n";
    }
    return os.str();
}

}  // namespace lsft

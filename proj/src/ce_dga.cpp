#include "lsft/ce_dga.hpp"

#include <algorithm>

namespace lsft {

int chord_degree(const Piece& p, int chord) {
    for (int b = 0; b < p.E(); ++b) {
        const Event& e = p.events[b];
        if (e.label != chord) continue;
        if (e.kind == EventKind::RightCusp) return 1;
        return p.mu[b][e.row] - p.mu[b][e.row + 1];
    }
    throw MathError("UnknownGenerator q" + std::to_string(chord));
}

GradingTable piece_grading(const Piece& p, const LineNames& names, int rot) {
    GradingTable g;
    g.modulus = p.muModulus;
    g.t_degree = -2 * rot;
    for (int c : p.chordLabels()) {
        int q = chord_degree(p, c);
        g.deg[Gen::q(c)] = g.reduce(q);
        g.deg[Gen::p(c)] = g.reduce(-1 - q);
    }
    auto line = [&](int side, int n, const std::vector<int>& pair) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                int mi = p.pointMu(side, i), mj = p.pointMu(side, j);
                g.deg[names.alpha(side, i, j)] = g.reduce(side == 1 ? mi - mj - 1 : mj - mi - 1);
            }
        for (int i = 1; i <= n; ++i)
            if (i < pair.at(i)) g.deg[names.beta(side, i, pair[i])] = g.reduce(-1);
    };
    if (p.leftLine) line(1, p.nLeft(), p.pairL);
    if (p.rightLine) line(2, p.nRight(), p.pairR);
    return g;
}

namespace {

Gen plainAlpha(const Segment& s) { return Gen::alpha(s.i, s.j); }

// Free word of a disk; line segments are dropped when skipSegments is set.
Monomial word_of(const DiskBoundary& d, bool skipSegments) {
    Monomial m = Monomial::one(Discipline::FreeWord);
    for (auto& w : d.word) {
        if (w.isSegment && skipSegments) continue;
        m = m * Monomial::of(w.isSegment ? plainAlpha(w.s) : Gen::q(w.c.chord), Discipline::FreeWord);
    }
    return m;
}

Poly one_positive_words(const Piece& p, int v, bool rightEnds, const Caps& caps) {
    DiskScope sc;
    sc.piece = &p;
    sc.rightEnds = rightEnds;
    Poly r(Discipline::FreeWord);
    auto rc = p.rightCuspLabels();
    if (std::find(rc.begin(), rc.end(), v) != rc.end()) r.toggle(Monomial::one(Discipline::FreeWord));
    for (auto& d : sweep_disks(sc, caps)) {
        if (d.positiveCount() != 1) continue;
        bool hit = false;
        for (auto& c : d.corners) hit = hit || (c.positive() && c.chord == v);
        if (!hit) continue;
        r.toggle(word_of(d, false));
    }
    return r;
}

void sivek_alpha_d(Dga& a, int n) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly v(Discipline::FreeWord);
            for (int k = i + 1; k < j; ++k)
                v += Poly::gen(Gen::alpha(i, k), Discipline::FreeWord) * Poly::gen(Gen::alpha(k, j), Discipline::FreeWord);
            a.gens.push_back(Gen::alpha(i, j));
            a.d.table[Gen::alpha(i, j)] = v;
        }
}

Dga chord_dga(const std::string& name, const Piece& p, int rot) {
    Dga a;
    a.name = name;
    a.disc = Discipline::FreeWord;
    a.d.disc = Discipline::FreeWord;
    GradingTable full = piece_grading(p, LineNames::plain(), rot);
    a.grading.modulus = full.modulus;
    for (int c : p.chordLabels()) {
        a.gens.push_back(Gen::q(c));
        a.grading.deg[Gen::q(c)] = full.of(Gen::q(c));
    }
    return a;
}

}  // namespace

Dga build_ce(const FrontDiagram& d, const Caps& caps) {
    Dga a = chord_dga("CE", d.whole, d.rot);
    for (int c : d.whole.chordLabels()) a.d.table[Gen::q(c)] = ce_disks(d.whole, c, caps);
    return a;
}

Dga build_sivek_middle(int n, const std::vector<int>& mu) {
    Dga a;
    a.name = "Sivek A^M";
    a.disc = Discipline::FreeWord;
    a.d.disc = Discipline::FreeWord;
    sivek_alpha_d(a, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) a.grading.deg[Gen::alpha(i, j)] = mu.at(i) - mu.at(j) - 1;
    return a;
}

Dga build_sivek_left(const FrontDiagram& d, const Caps& caps) {
    Split s = split(d);
    Dga a = chord_dga("Sivek A^L", s.left, d.rot);
    for (int c : s.left.chordLabels()) a.d.table[Gen::q(c)] = one_positive_words(s.left, c, false, caps);
    return a;
}

Dga build_sivek_right(const FrontDiagram& d, const Caps& caps) {
    Split s = split(d);
    Dga a = chord_dga("Sivek A^R", s.right, d.rot);
    for (int c : s.right.chordLabels()) a.d.table[Gen::q(c)] = one_positive_words(s.right, c, true, caps);
    sivek_alpha_d(a, s.right.nLeft());
    GradingTable full = piece_grading(s.right, LineNames::plain(), d.rot);
    for (int i = 1; i <= s.right.nLeft(); ++i)
        for (int j = i + 1; j <= s.right.nLeft(); ++j) a.grading.deg[Gen::alpha(i, j)] = full.of(Gen::alpha(i, j));
    return a;
}

SivekSplit sivek_maps(const FrontDiagram& d, const Caps& caps) {
    SivekSplit s;
    Split sp = split(d);
    s.A = build_ce(d, caps);
    s.AL = build_sivek_left(d, caps);
    s.AR = build_sivek_right(d, caps);
    int n = sp.mid.n;
    std::vector<int> mu(n + 1);
    for (int i = 1; i <= n; ++i) mu[i] = sp.left.pointMu(2, i);
    s.AM = build_sivek_middle(n, mu);
    s.AM.grading.modulus = sp.left.muModulus;

    s.ell = {"ell", s.AM.name, s.AL.name, {}};
    s.r = {"r", s.AM.name, s.AR.name, {}};
    s.L = {"L", s.AL.name, s.A.name, {}};
    s.R = {"R", s.AR.name, s.A.name, {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly v(Discipline::FreeWord);
            for (auto& disk : half_disks(sp.left, i, j, Profile::NoPositive, caps)) v.toggle(word_of(disk, true));
            Gen a = Gen::alpha(i, j);
            s.ell.map[a] = v;
            s.R.map[a] = v;
            s.r.map[a] = Poly::gen(a, Discipline::FreeWord);
        }
    for (Gen g : s.AL.gens) s.L.map[g] = Poly::gen(g, Discipline::FreeWord);
    for (Gen g : s.AR.gens)
        if (g.isChord()) s.R.map[g] = Poly::gen(g, Discipline::FreeWord);
    return s;
}

Report verify_sivek_pushout(const SivekSplit& s) {
    Report rep;
    rep.subject = "Sivek bordered CE";
    for (const Dga* a : {&s.A, &s.AL, &s.AM, &s.AR}) {
        rep.add(verify_d_squared(*a));
        rep.add(verify_degrees(*a));
    }
    rep.add(verify_chain_map(s.ell, s.AM, s.AL));
    rep.add(verify_chain_map(s.r, s.AM, s.AR));
    rep.add(verify_chain_map(s.L, s.AL, s.A));
    rep.add(verify_chain_map(s.R, s.AR, s.A));
    Check sq{"square L.ell=R.r"};
    for (Gen g : s.AM.gens) {
        Poly a = s.L.apply(s.ell.map.at(g), Discipline::FreeWord);
        Poly b = s.R.apply(s.r.map.at(g), Discipline::FreeWord);
        if (a != b) {
            sq.ok = false;
            sq.detail += g.str() + " ";
        }
    }
    rep.add(sq);
    Check cov{"pushout coverage"};
    for (Gen g : s.A.gens) {
        int hits = s.AL.has(g) + (s.AR.has(g) ? 1 : 0);
        if (hits != 1) {
            cov.ok = false;
            cov.detail += g.str() + " ";
        }
    }
    for (Gen g : s.AL.gens)
        if (!s.A.has(g)) cov.ok = false;
    for (Gen g : s.AR.gens)
        if (g.isChord() && !s.A.has(g)) cov.ok = false;
    rep.add(cov);
    return rep;
}

DgaMorphism induced_map(const SivekSplit& s, const DgaMorphism& f, const DgaMorphism& g) {
    DgaMorphism h{"induced", s.A.name, f.target, {}};
    for (Gen x : s.A.gens) h.map[x] = s.AL.has(x) ? f.map.at(x) : g.map.at(x);
    return h;
}

}  // namespace lsft

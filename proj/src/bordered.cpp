#include "lsft/bordered.hpp"

#include <map>

namespace lsft {

namespace {

Poly g1(Gen g) { return Poly::gen(g); }

std::vector<Gen> middleGens(const MiddleData& mid) {
    std::vector<Gen> gs;
    int n = mid.n;
    for (Tag tag : {Tag::AlphaL, Tag::AlphaR})
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) gs.push_back(Gen{tag, i, j});
    for (int i = 1; i <= n; ++i)
        if (i < mid.betaL.at(i)) gs.push_back(Gen::betaL(i, mid.betaL[i]));
    for (int i = 1; i <= n; ++i)
        if (i < mid.betaR.at(i)) gs.push_back(Gen::betaR(i, mid.betaR[i]));
    return gs;
}

// sum over the pairs (k,i)/(i,k) sharing exactly the index i with {i,j}
Poly betaSum(int n, int i, int j) {
    Poly v;
    auto hm = [](int a, int b) { return g1(Gen::alphaL(a, b)) * g1(Gen::alphaR(a, b)); };
    for (int k = 1; k < i; ++k) v += hm(k, i);
    for (int k = i + 1; k <= n; ++k)
        if (k != j) v += hm(i, k);
    for (int k = 1; k < j; ++k)
        if (k != i) v += hm(k, j);
    for (int k = j + 1; k <= n; ++k) v += hm(j, k);
    return v;
}

int windowStart(int lo) { return lo < 0 ? 0 : lo + 1; }

KnotTrace cyclicTrace(const Piece& p) {
    KnotTrace tr = trace_knot(p);
    if (!p.mark && (p.leftLine || p.rightLine)) {
        int a = p.anchorPoint, side = p.anchorSide;
        int partner = side == 1 ? p.pairL.at(a) : p.pairR.at(a);
        tr.push_back(Site{Site::Jump, -1, 0, 0, side, partner, a});
    }
    return tr;
}

// Image of the beta generator pairing points i,j of line `side` of P, read
// off the strand of P leaving point i: chord ends and outer jumps, mod 2.
Poly betaWalk(const Piece& P, int side, int i, int j, const LineNames& outer) {
    KnotTrace tr = cyclicTrace(P);
    int n = static_cast<int>(tr.size()), k = -1;
    for (int x = 0; x < n; ++x)
        if (tr[x].kind == Site::Point && tr[x].side == side && tr[x].i == i) k = x;
    if (k < 0) throw MathError("no line point " + std::to_string(i));
    const Site& nxt = tr[(k + 1) % n];
    int step = (nxt.kind == Site::Jump && nxt.side == side) ? -1 : 1;
    std::map<int, int> chords;
    std::map<Gen, int> jumps;
    int x = k;
    for (int guard = 0; guard <= n; ++guard) {
        x = ((x + step) % n + n) % n;
        const Site& s = tr[x];
        if (s.kind == Site::Point && s.side == side) {
            if (s.i != j) throw MathError("strand from point " + std::to_string(i) + " ends at " + std::to_string(s.i));
            Poly v;
            for (auto [c, m] : chords)
                if (m % 2) v += g1(Gen::p(c)) * g1(Gen::q(c));
            for (auto& [b, m] : jumps)
                if (m % 2) v += g1(b);
            return v;
        }
        if (s.kind == Site::Chord) ++chords[s.chord];
        if (s.kind == Site::Jump && s.side != side) ++jumps[outer.beta(s.side, s.i, s.j)];
    }
    throw MathError("strand walk does not close");
}

void checkBounds(const FrontDiagram& d, const std::array<int, 4>& e) {
    auto dv = d.divides();
    auto isDivide = [&](int x) { return std::find(dv.begin(), dv.end(), x) != dv.end(); };
    if (!isDivide(e[1]) || !isDivide(e[2]) || e[1] >= e[2])
        throw DiagramError("BoundaryMismatch", "inner lines must be two dividing lines in order");
    if (e[0] >= 0 && (!isDivide(e[0]) || e[0] >= e[1])) throw DiagramError("BoundaryMismatch", "left outer line");
    if (e[3] >= 0 && (!isDivide(e[3]) || e[3] <= e[2])) throw DiagramError("BoundaryMismatch", "right outer line");
}

DgaMorphism identityOn(const std::string& name, const Dga& src, const Dga& tgt) {
    DgaMorphism m{name, src.name, tgt.name, {}};
    for (Gen g : src.gens)
        if (g.isChord()) m.map[g] = g1(g);
    return m;
}

}  // namespace

Derivation middle_sft_part(const MiddleData& mid) {
    Derivation D;
    int n = mid.n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Poly r, l;
            for (int k = j + 1; k <= n; ++k) {
                r += g1(Gen::alphaR(i, k)) * g1(Gen::alphaL(j, k));
                l += g1(Gen::alphaL(i, k)) * g1(Gen::alphaR(j, k));
            }
            for (int k = 1; k < i; ++k) {
                r += g1(Gen::alphaR(k, j)) * g1(Gen::alphaL(k, i));
                l += g1(Gen::alphaL(k, j)) * g1(Gen::alphaR(k, i));
            }
            D.table[Gen::alphaR(i, j)] = r;
            D.table[Gen::alphaL(i, j)] = l;
        }
    for (int i = 1; i <= n; ++i) {
        if (i < mid.betaL.at(i)) D.table[Gen::betaL(i, mid.betaL[i])] = betaSum(n, i, mid.betaL[i]);
        if (i < mid.betaR.at(i)) D.table[Gen::betaR(i, mid.betaR[i])] = betaSum(n, i, mid.betaR[i]);
    }
    return D;
}

Poly middle_h2(const MiddleData& mid) {
    Poly h;
    int n = mid.n;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int j = k + 1; j <= n; ++j) {
                h += g1(Gen::alphaR(i, k)) * g1(Gen::alphaR(k, j)) * g1(Gen::alphaL(i, j));
                h += g1(Gen::alphaL(i, k)) * g1(Gen::alphaL(k, j)) * g1(Gen::alphaR(i, j));
            }
    return h;
}

Dga build_middle_sft(const MiddleData& mid, int modulus) {
    Dga a;
    a.name = "A^M_SFT";
    a.bracket = true;
    a.gens = middleGens(mid);
    a.grading.modulus = modulus;
    int n = mid.n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            a.grading.deg[Gen::alphaL(i, j)] = a.grading.reduce(mid.mu.at(i) - mid.mu.at(j) - 1);
            a.grading.deg[Gen::alphaR(i, j)] = a.grading.reduce(mid.mu.at(j) - mid.mu.at(i) - 1);
        }
    for (Gen g : a.gens)
        if (g.isBeta()) a.grading.deg[g] = a.grading.reduce(-1);
    Poly h;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) h += g1(Gen::alphaL(i, j)) * g1(Gen::alphaR(i, j));
    a.hamiltonian = h;
    a.delta = delta_str_middle(mid);
    Derivation sft = middle_sft_part(mid);
    for (Gen g : a.gens) a.d.table[g] = sft.at(g) + a.delta->at(g);
    return a;
}

Dga build_lr_sft(const Piece& p, int rot, const Caps& caps) {
    return build_piece_sft("A^LR_SFT", p, LineNames::sided(), rot, caps);
}

DgaMorphism attach_left(const FrontDiagram& d, int lo, int mid, int hi, const Dga& src, const Dga& tgt,
                        const Caps& caps) {
    DgaMorphism m = identityOn("attach-left", src, tgt);
    Piece big = window(d, lo, hi), outside = window(d, lo, mid);
    LineNames names = LineNames::sided();
    int local = mid - windowStart(lo);
    auto tag = [&](const Segment& s) { return names.alpha(s.side, s.i, s.j); };
    for (Gen g : src.gens) {
        if (g.isChord()) continue;
        if (g.side() == 2) {
            m.map[g] = g1(g);
        } else if (g.isAlpha()) {
            Poly v;
            for (auto& disk : lr_morphism_disks(big, local, 1, g.i, g.j, caps)) v.toggle(disk_monomial(disk, tag, true));
            m.map[g] = v;
        } else {
            m.map[g] = betaWalk(outside, 2, g.i, g.j, names);
        }
    }
    return m;
}

DgaMorphism attach_right(const FrontDiagram& d, int lo, int mid, int hi, const Dga& src, const Dga& tgt,
                         const Caps& caps) {
    DgaMorphism m = identityOn("attach-right", src, tgt);
    Piece big = window(d, lo, hi), outside = window(d, mid, hi);
    LineNames names = LineNames::sided();
    int local = mid - windowStart(lo);
    auto tag = [&](const Segment& s) { return names.alpha(s.side, s.i, s.j); };
    for (Gen g : src.gens) {
        if (g.isChord()) continue;
        if (g.side() == 1) {
            m.map[g] = g1(g);
        } else if (g.isAlpha()) {
            Poly v;
            for (auto& disk : lr_morphism_disks(big, local, 2, g.i, g.j, caps)) v.toggle(disk_monomial(disk, tag, true));
            m.map[g] = v;
        } else {
            m.map[g] = betaWalk(outside, 1, g.i, g.j, names);
        }
    }
    return m;
}

LrSquare build_lr_square(const FrontDiagram& d, std::array<int, 4> e, const Caps& caps) {
    checkBounds(d, e);
    LrSquare s;
    s.e = e;
    s.A2 = build_lr_sft(window(d, e[1], e[2]), d.rot, caps);
    s.A12 = build_lr_sft(window(d, e[0], e[2]), d.rot, caps);
    s.A23 = build_lr_sft(window(d, e[1], e[3]), d.rot, caps);
    s.A123 = build_lr_sft(window(d, e[0], e[3]), d.rot, caps);
    s.A2.name = "A(2)";
    s.A12.name = "A(12)";
    s.A23.name = "A(23)";
    s.A123.name = "A(123)";
    s.f = attach_left(d, e[0], e[1], e[2], s.A2, s.A12, caps);
    s.g = attach_right(d, e[1], e[2], e[3], s.A2, s.A23, caps);
    s.F = attach_right(d, e[0], e[2], e[3], s.A12, s.A123, caps);
    s.G = attach_left(d, e[0], e[1], e[3], s.A23, s.A123, caps);
    s.f.name = "A(2)->A(12)";
    s.g.name = "A(2)->A(23)";
    s.F.name = "A(12)->A(123)";
    s.G.name = "A(23)->A(123)";
    return s;
}

Report verify_lr_square(const LrSquare& s) {
    Report rep;
    rep.subject = "two-sided pushout";
    for (const Dga* a : {&s.A2, &s.A12, &s.A23, &s.A123}) {
        rep.add(verify_d_squared(*a));
        rep.add(verify_qme(*a));
        rep.add(verify_degrees(*a));
    }
    rep.add(verify_chain_map(s.f, s.A2, s.A12));
    rep.add(verify_chain_map(s.g, s.A2, s.A23));
    rep.add(verify_chain_map(s.F, s.A12, s.A123));
    rep.add(verify_chain_map(s.G, s.A23, s.A123));
    Check sq{"square A(2)->A(123)"};
    for (Gen g : s.A2.gens) {
        Poly a = s.F.apply(s.f.map.at(g), Discipline::Commutative);
        Poly b = s.G.apply(s.g.map.at(g), Discipline::Commutative);
        if (a != b) {
            sq.ok = false;
            sq.detail += g.str() + ": " + (a + b).str() + "; ";
        }
    }
    rep.add(sq);
    return rep;
}

Report lr_pushout(const FrontDiagram& d, std::array<int, 4> e, const Caps& caps) {
    return verify_lr_square(build_lr_square(d, e, caps));
}

FrontDiagram double_divide(const FrontDiagram& d, int divideEvent) {
    std::vector<Event> ev = d.events;
    ev.insert(ev.begin() + divideEvent + 1, Event{EventKind::Divide, 0});
    std::optional<Slot> mark = d.mark;
    if (mark && mark->b > divideEvent) mark->b += 1;
    FrontDiagram out = parse_front(front_text(ev, mark, true), d.flip);
    if (!d.mark) out.whole.mark = Slot{divideEvent, 1};
    return out;
}

BorderedSplit build_bordered(const FrontDiagram& d, const Caps& caps) {
    auto dv = d.divides();
    if (dv.empty()) throw DiagramError("NoDividingLine", "diagram has no dividing line");
    if (dv.size() > 1) throw DiagramError("TwoDividingLines", "use an LR split");
    if (d.mark && d.mark->b > dv[0])
        throw DiagramError("MarkPlacement", "bordered splits need the mark left of the dividing line");
    BorderedSplit s;
    s.D1 = dv[0];
    s.D2 = dv[0] + 1;
    s.doubled = double_divide(d, dv[0]);
    s.mid = middle_of(d, dv[0]);
    gamma_paths(s.mid);
    LrSquare sq = build_lr_square(s.doubled, {-1, s.D1, s.D2, -1}, caps);

    const std::map<Tag, Tag> leftNames = {{Tag::AlphaR, Tag::Alpha}, {Tag::BetaR, Tag::Beta}};
    const std::map<Tag, Tag> rightNames = {{Tag::AlphaL, Tag::Alpha}, {Tag::BetaL, Tag::Beta}};
    s.M = build_middle_sft(s.mid, d.whole.muModulus);
    s.Mlr = sq.A2;
    s.Mlr.name = "A^M_SFT (trivial braid)";
    s.AL = sq.A12;
    s.AL.name = "A^L_SFT";
    retag(s.AL, leftNames);
    s.AR = sq.A23;
    s.AR.name = "A^R_SFT";
    retag(s.AR, rightNames);
    s.A = build_lsft(d, caps);
    s.h2 = middle_h2(s.mid);

    s.ell = sq.f;
    s.ell.name = "ell";
    s.ell.source = s.M.name;
    s.ell.target = s.AL.name;
    retag_target(s.ell, leftNames);
    s.r = sq.g;
    s.r.name = "r";
    s.r.source = s.M.name;
    s.r.target = s.AR.name;
    retag_target(s.r, rightNames);
    s.L = sq.F;
    s.L.name = "L";
    s.L.source = s.AL.name;
    s.L.target = s.A.name;
    retag_source(s.L, leftNames);
    s.R = sq.G;
    s.R.name = "R";
    s.R.source = s.AR.name;
    s.R.target = s.A.name;
    retag_source(s.R, rightNames);
    return s;
}

Check verify_delta_bracket(const Dga& a) {
    Check c{"delta derivation of bracket " + a.name};
    if (!a.delta) {
        c.ok = false;
        return c;
    }
    BracketTable B;
    int shown = 0;
    for (size_t i = 0; i < a.gens.size(); ++i)
        for (size_t j = i; j < a.gens.size(); ++j) {
            Poly x = g1(a.gens[i]), y = g1(a.gens[j]);
            Poly lhs = derive(*a.delta, bracket(B, x, y));
            Poly rhs = bracket(B, a.delta->at(a.gens[i]), y) + bracket(B, x, a.delta->at(a.gens[j]));
            if (lhs != rhs) {
                c.ok = false;
                if (shown++ < 4) c.detail += a.gens[i].str() + "," + a.gens[j].str() + " ";
            }
        }
    return c;
}

Check verify_h2(const Dga& m, const Poly& h2) {
    Check c{"{h,{h,x}}={h2,x} " + m.name};
    BracketTable B;
    for (Gen g : m.gens) {
        Poly x = g1(g);
        Poly lhs = bracket(B, *m.hamiltonian, bracket(B, *m.hamiltonian, x));
        Poly rhs = bracket(B, h2, x);
        if (lhs != rhs) {
            c.ok = false;
            c.detail += g.str() + " ";
        }
    }
    return c;
}

Report verify_bordered_suite(const BorderedSplit& s) {
    Report rep;
    rep.subject = "bordered LSFT";
    for (const Dga* a : {&s.A, &s.M, &s.AL, &s.AR}) {
        rep.add(verify_d_squared(*a));
        rep.add(verify_degrees(*a));
        rep.add(verify_qme(*a));
    }
    Check dh{"delta(h^M)=h^M_2"};
    Poly dhm = derive(*s.M.delta, *s.M.hamiltonian);
    if (dhm != s.h2) {
        dh.ok = false;
        dh.detail = (dhm + s.h2).str();
    }
    rep.add(dh);
    rep.add(verify_h2(s.M, s.h2));
    rep.add(verify_sft_form(s.M));
    rep.add(verify_jacobi(s.M));
    rep.add(verify_jacobi(s.AL));
    rep.add(verify_jacobi(s.AR));
    rep.add(verify_delta_bracket(s.M));
    rep.add(verify_delta_bracket(s.AL));
    Check iso{"A^M = trivial braid two-sided algebra"};
    for (Gen g : s.M.gens)
        if (!s.Mlr.has(g) || s.Mlr.d.at(g) != s.M.d.at(g)) {
            iso.ok = false;
            iso.detail += g.str() + " ";
        }
    if (s.Mlr.gens.size() != s.M.gens.size()) iso.ok = false;
    rep.add(iso);
    rep.add(verify_chain_map(s.ell, s.M, s.AL));
    rep.add(verify_chain_map(s.r, s.M, s.AR));
    rep.add(verify_chain_map(s.L, s.AL, s.A));
    rep.add(verify_chain_map(s.R, s.AR, s.A));
    Check sq{"square L.ell=R.r"};
    for (Gen g : s.M.gens) {
        Poly a = s.L.apply(s.ell.map.at(g), Discipline::Commutative);
        Poly b = s.R.apply(s.r.map.at(g), Discipline::Commutative);
        if (a != b) {
            sq.ok = false;
            sq.detail += g.str() + ": " + (a + b).str() + "; ";
        }
    }
    rep.add(sq);
    Check cov{"pushout coverage"};
    for (Gen g : s.A.gens) {
        int hits = (s.AL.has(g) ? 1 : 0) + (s.AR.has(g) ? 1 : 0);
        if (hits != 1) {
            cov.ok = false;
            cov.detail += g.str() + " ";
        }
    }
    rep.add(cov);
    return rep;
}

}  // namespace lsft

#include "lsft/lsft.hpp"

namespace lsft {

Poly piece_hamiltonian(const Piece& p, const LineNames& names, const Caps& caps) {
    Poly h;
    auto tag = [&](const Segment& s) { return names.alpha(s.side, s.i, s.j); };
    for (auto& d : hamiltonian_disks(p, caps)) h.toggle(disk_monomial(d, tag));
    for (int c : p.rightCuspLabels()) h += Poly::gen(Gen::p(c));
    return h;
}

Dga build_piece_sft(const std::string& name, const Piece& p, const LineNames& names, int rot, const Caps& caps) {
    Dga a;
    a.name = name;
    a.bracket = true;
    a.hasT = p.mark.has_value();
    a.gens = piece_generators(p, names);
    a.grading = piece_grading(p, names, rot);
    a.hamiltonian = piece_hamiltonian(p, names, caps);
    a.delta = delta_str_walker(p, names);
    BracketTable B;
    for (Gen g : a.gens) a.d.table[g] = bracket(B, *a.hamiltonian, Poly::gen(g)) + a.delta->at(g);
    a.d.tLog = a.delta->tLog;
    return a;
}

Dga build_lsft(const FrontDiagram& d, const Caps& caps) {
    if (!d.whole.mark) throw MissingBasePoint();
    return build_piece_sft("A_SFT", d.whole, LineNames::sided(), d.rot, caps);
}

Check verify_qme(const Dga& a) {
    Check c{"QME " + a.name};
    if (!a.hamiltonian || !a.delta) {
        c.ok = false;
        c.detail = "no Hamiltonian";
        return c;
    }
    BracketTable B;
    Poly v = derive(*a.delta, *a.hamiltonian) + arrow(B, *a.hamiltonian, *a.hamiltonian);
    if (!v.isZero()) {
        c.ok = false;
        c.detail = v.str();
    }
    return c;
}

Check verify_ce_consistency(const Dga& sft, const Dga& ce) {
    Check c{"CE = p-free part of d_SFT"};
    for (Gen g : ce.gens) {
        Poly a = abelianize(ce.d.at(g));
        Poly b = set_t_one(drop_if(sft.d.at(g), [](Gen x) { return x.tag == Tag::P; }));
        if (a != b) {
            c.ok = false;
            c.detail += g.str() + ": " + (a + b).str() + "; ";
        }
    }
    return c;
}

}  // namespace lsft

#pragma once

#include "lsft/ce_dga.hpp"
#include "lsft/dga.hpp"

namespace lsft {

struct MissingBasePoint : DiagramError {
    MissingBasePoint() : DiagramError("MissingBasePoint", "closed diagram needs a mark or a dividing line") {}
};

// Hamiltonian of a piece: disk monomials plus p for each right cusp.
Poly piece_hamiltonian(const Piece& p, const LineNames& names, const Caps& caps = {});

// Commutative SFT algebra on a piece with line generators named by names;
// d = {h,.} + delta_str.
Dga build_piece_sft(const std::string& name, const Piece& p, const LineNames& names, int rot, const Caps& caps = {});

Dga build_lsft(const FrontDiagram& d, const Caps& caps = {});

// delta(h) + h->h = 0
Check verify_qme(const Dga& a);
// p-free part of d(q) with t=1 equals the abelianized CE differential.
Check verify_ce_consistency(const Dga& sft, const Dga& ce);

}  // namespace lsft

#pragma once

#include "lsft/dga.hpp"
#include "lsft/diagram.hpp"
#include "lsft/disks.hpp"
#include "lsft/strings.hpp"

namespace lsft {

// Degrees of the generators a piece carries: crossings by Maslov potential,
// right cusps 1, p = -1 - q, beta -1, alpha by the line rule.
GradingTable piece_grading(const Piece& p, const LineNames& names, int rot);
int chord_degree(const Piece& p, int chord);

Dga build_ce(const FrontDiagram& d, const Caps& caps = {});
Dga build_sivek_middle(int n, const std::vector<int>& mu);
Dga build_sivek_left(const FrontDiagram& d, const Caps& caps = {});
Dga build_sivek_right(const FrontDiagram& d, const Caps& caps = {});

struct SivekSplit {
    Dga A, AL, AM, AR;
    DgaMorphism ell, r, L, R;
};

// Uses the first dividing line of d.
SivekSplit sivek_maps(const FrontDiagram& d, const Caps& caps = {});
Report verify_sivek_pushout(const SivekSplit& s);
// The map A -> B glued from f on left generators and g on right ones.
DgaMorphism induced_map(const SivekSplit& s, const DgaMorphism& f, const DgaMorphism& g);

}  // namespace lsft

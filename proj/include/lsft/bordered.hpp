#pragma once

#include <array>

#include "lsft/lsft.hpp"

namespace lsft {

// Closed-form middle algebra: d = d_SFT^M + delta^M, h^M = sum aL_ij aR_ij.
Dga build_middle_sft(const MiddleData& mid, int modulus = 0);
Poly middle_h2(const MiddleData& mid);
// d_SFT^M alone, from its defining sums.
Derivation middle_sft_part(const MiddleData& mid);

// Two-sided algebra of a piece; alpha/beta carry their line side.
Dga build_lr_sft(const Piece& p, int rot, const Caps& caps = {});

// Pieces of a front cut at divide events e[0] < e[1] < e[2] < e[3]; e[0] and
// e[3] may be -1 for no outer line.  Lambda_2 sits between e[1] and e[2].
struct LrSquare {
    std::array<int, 4> e{};
    Dga A2, A12, A23, A123;
    DgaMorphism f, g, F, G;  // A2->A12, A2->A23, A12->A123, A23->A123
};

LrSquare build_lr_square(const FrontDiagram& d, std::array<int, 4> e, const Caps& caps = {});
Report verify_lr_square(const LrSquare& s);
// Builds and checks the square for adjacent two-sided pieces.
Report lr_pushout(const FrontDiagram& d, std::array<int, 4> e, const Caps& caps = {});

// Gluing maps: a piece extended on the left (attach_left) or on the right
// (attach_right) across divide event mid.
DgaMorphism attach_left(const FrontDiagram& d, int lo, int mid, int hi, const Dga& src, const Dga& tgt,
                        const Caps& caps = {});
DgaMorphism attach_right(const FrontDiagram& d, int lo, int mid, int hi, const Dga& src, const Dga& tgt,
                         const Caps& caps = {});

// The split at one dividing line M, built on the front with M doubled.
struct BorderedSplit {
    FrontDiagram doubled;
    int D1 = -1, D2 = -1;
    MiddleData mid;
    Dga A, M, AL, AR;
    Dga Mlr;  // middle algebra as a trivial two-sided piece
    DgaMorphism ell, r, L, R;
    Poly h2;
};

FrontDiagram double_divide(const FrontDiagram& d, int divideEvent);
BorderedSplit build_bordered(const FrontDiagram& d, const Caps& caps = {});
Report verify_bordered_suite(const BorderedSplit& s);

// Pairs of generators where delta fails to be a derivation of the bracket.
Check verify_delta_bracket(const Dga& a);
// {h,{h,x}} = {h2,x} on every generator.
Check verify_h2(const Dga& m, const Poly& h2);

}  // namespace lsft

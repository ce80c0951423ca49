#pragma once

#include <string>
#include <vector>

#include "lsft/algebra.hpp"
#include "lsft/diagram.hpp"

namespace lsft {

struct NotRepresentable : MathError {
    using MathError::MathError;
};

// How walker output names line generators.  Left-line alpha/beta and
// right-line alpha/beta get their own tags.
struct LineNames {
    Tag alphaLeft = Tag::AlphaL, alphaRight = Tag::AlphaR;
    Tag betaLeft = Tag::BetaL, betaRight = Tag::BetaR;

    static LineNames sided() { return {}; }
    // a half piece whose only line carries plain alpha/beta
    static LineNames plain() { return {Tag::Alpha, Tag::Alpha, Tag::Beta, Tag::Beta}; }

    Gen alpha(int side, int i, int j) const;
    Gen beta(int side, int i, int j) const;
};

// A broken closed string held as the run of trace sites it passes once,
// plus the chord it jumps across (p/q) or the line segment it uses (alpha).
struct BrokenString {
    Gen gen;
    std::vector<Site> sites;
    int chord = -1;        // jumped chord for p/q
    bool extraPass = false;  // corner at the chord is not holomorphic as walked
    int side = 0, i = 0, j = 0;  // line segment for alpha
    int basePointPasses = 0;     // t only

    std::string str() const;
};

BrokenString string_for(Gen g, const Piece& p, const LineNames& names = LineNames::sided());
Poly insertions(const BrokenString& s, const Piece& p, const LineNames& names = LineNames::sided());

struct PathSet {
    std::vector<std::vector<Gen>> gamma;  // index 1..n
    Poly sum(int i) const;
};

// Alternating walk from point 1, beta^R first.  Throws MathError("Disconnected")
// when the pairings do not close up to a single loop.
PathSet gamma_paths(const MiddleData& mid);

// Generators a piece carries under the walker: p/q per chord, alpha per line
// pair i<j, beta per paired line points.  Powers of t are scalars.
std::vector<Gen> piece_generators(const Piece& p, const LineNames& names = LineNames::sided());

// String differential of a piece, every generator in piece_generators.
Derivation delta_str_walker(const Piece& p, const LineNames& names = LineNames::sided());
// Closed formulas on the middle algebra.
Derivation delta_str_middle(const MiddleData& mid);

std::string dump_strings(const Piece& p, const LineNames& names = LineNames::sided());

}  // namespace lsft

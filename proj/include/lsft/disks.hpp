#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsft/algebra.hpp"
#include "lsft/diagram.hpp"

namespace lsft {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    int maxIntervals = 16;
    int maxCorners = 32;
    long maxDisks = 2000000;
    static Caps fromEnv(Caps base);
    static Caps fromEnv();
};

// Quadrants at a crossing: 'L','R' positive, 'T','B' negative.  A right
// cusp corner is always 'L'.
struct Corner {
    int chord = -1;
    char quad = 'L';
    bool positive() const { return quad == 'L' || quad == 'R'; }
    auto operator<=>(const Corner&) const = default;
};

// side: 1 left line, 2 right line, 3 internal dividing line
struct Segment {
    int side = 0;
    int i = 0, j = 0;
    bool distinguished = false;
    auto operator<=>(const Segment&) const = default;
};

struct WordItem {
    bool isSegment = false;
    Corner c;
    Segment s;
};

struct DiskBoundary {
    std::vector<Corner> corners;  // sorted
    std::vector<Segment> segments;  // sorted
    int t = 0;
    int sheets = 1;                 // number of ends; 1 means a single strip
    std::vector<WordItem> word;     // counterclockwise reading, single strips only

    int positiveCount() const;
    bool operator<(const DiskBoundary& o) const;
    bool operator==(const DiskBoundary& o) const;
    std::string str() const;
};

enum class DivideMode { Transparent, End, Start };

struct DiskScope {
    const Piece* piece = nullptr;
    bool leftStarts = true;   // segments on the left line may start a disk
    bool rightEnds = true;    // segments on the right line may end strips
    int divide = -1;          // internal divide event (piece index) with a mode
    DivideMode mode = DivideMode::Transparent;
    int di = 0, dj = 0;       // distinguished interval on that divide
};

// Column sweep from left to right.  Returns every admissible
// disk of the scope once, in canonical order.
std::vector<DiskBoundary> sweep_disks(const DiskScope& scope, const Caps& caps = {});

// Brute-force enumeration of closed boundary walks, each checked by winding
// numbers and rebuilt slice by slice.  budget bounds search steps (BudgetError
// past it); maxSheets bounds how often a walk may reuse one edge.
std::vector<DiskBoundary> oracle_disks(const DiskScope& scope, long budget = 1L << 22, int maxSheets = 4);

using SegmentTag = std::function<Gen(const Segment&)>;

// Commutative monomial of a disk (corners as p/q, segments via tag, t power).
Monomial disk_monomial(const DiskBoundary& d, const SegmentTag& tag, bool skipDistinguished = false);
// Ordered word of a single strip disk, starting after its positive corner.
Monomial disk_word(const DiskBoundary& d, const SegmentTag& tag);

enum class Scope { Full, Left, Right, LR };

// Hamiltonian disks of a piece (no cusp loop terms).
std::vector<DiskBoundary> hamiltonian_disks(const Piece& p, const Caps& caps = {});
// CE disks of a closed front with the positive corner at chord v, as free words.
Poly ce_disks(const Piece& closed, int v, const Caps& caps = {});

enum class Profile { NoPositive, OnePositive, Any };
// Disks of a half piece with a distinguished line segment (i,j).
std::vector<DiskBoundary> half_disks(const Piece& half, int i, int j, Profile profile, const Caps& caps = {});
// D^L (side 1) or D^R (side 2) disks through an internal divide of a piece.
std::vector<DiskBoundary> lr_morphism_disks(const Piece& p, int divide, int side, int i, int j, const Caps& caps = {});

std::string disks_json(const std::vector<DiskBoundary>& ds);

}  // namespace lsft

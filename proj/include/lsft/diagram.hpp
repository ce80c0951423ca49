#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsft {

struct DiagramError : std::runtime_error {
    std::string kind;
    DiagramError(std::string k, const std::string& msg) : std::runtime_error(k + ": " + msg), kind(std::move(k)) {}
};

enum class EventKind { LeftCusp, Crossing, RightCusp, Divide, Mark };

struct Event {
    EventKind kind;
    int row = 0;     // 1-indexed, top of the pair for cusps and crossings
    int label = -1;  // chord label for crossings and right cusps
};

struct Slot {
    int b = 0;    // column boundary, 0..E
    int pos = 0;  // 1-indexed from top
    bool operator==(const Slot&) const = default;
};

// A site on the (closed up) knot, in traversal order.
struct Site {
    enum Kind { Chord, Point, Jump } kind = Chord;
    int chord = -1;   // chord label
    int sign = 0;     // +1 for the R^+ end, -1 for the R^- end
    int heading = 0;  // direction of travel in degrees (45, 135, 225, 315)
    int side = 0;     // 1 left line, 2 right line (Point and Jump)
    int i = 0, j = 0; // Point: i; Jump: from i to j
};

using KnotTrace = std::vector<Site>;

struct MiddleData {
    int n = 0;
    std::vector<int> betaL, betaR;  // partner arrays, 1-indexed, size n+1
    std::vector<int> mu;            // size n+1
};

// A front piece between optional left and right dividing lines.  A closed
// diagram is the piece with neither line.
struct Piece {
    std::vector<Event> events;        // LeftCusp, Crossing, RightCusp, Divide
    std::vector<int> width;           // strands at each boundary, size E+1
    bool leftLine = false, rightLine = false;
    std::vector<int> pairL, pairR;    // partner arrays for line points
    std::vector<std::vector<int>> mu; // [b][pos]
    std::vector<std::vector<int>> dir;// [b][pos], +1 rightwards
    int muModulus = 0;
    std::optional<Slot> mark;         // base point inside the piece
    int anchorSide = 1, anchorPoint = 1;  // used when mark is empty
    int eventOffset = 0;              // index of events[0] in the parent diagram

    int E() const { return static_cast<int>(events.size()); }
    int nLeft() const { return width.front(); }
    int nRight() const { return width.back(); }
    std::vector<int> chordLabels() const;
    std::vector<int> rightCuspLabels() const;
    std::vector<int> divideEvents() const;
    // Maslov potential of a line point (side 1 left, 2 right)
    int pointMu(int side, int i) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

struct FrontDiagram {
    std::vector<Event> events;  // without Mark events
    std::optional<Slot> mark;   // explicit mark if given
    bool flip = false;
    Piece whole;                // closed piece, with mark resolved when possible
    int tb = 0, rot = 0;

    std::vector<int> divides() const { return whole.divideEvents(); }
    std::vector<int> chordLabels() const { return whole.chordLabels(); }
};

FrontDiagram parse_front(const std::string& text, bool flip = false);
MiddleData parse_middle(const std::string& text);
bool is_middle_text(const std::string& text);
ValidationReport validate(const FrontDiagram& d);
bool pairing_connectivity(const std::vector<int>& bl, const std::vector<int>& br);
std::vector<std::vector<int>> maslov_potential(const FrontDiagram& d);
std::pair<int, int> classical_invariants(const FrontDiagram& d);

// Piece strictly between divide events lo and hi (event indices, -1 for none).
Piece window(const FrontDiagram& d, int lo, int hi);
// Trivial braid piece with both lines.
Piece trivial_piece(const MiddleData& m);

struct Split {
    Piece left, right;
    MiddleData mid;
};
Split split(const FrontDiagram& d);
MiddleData middle_of(const FrontDiagram& d, int divideEvent);

KnotTrace trace_knot(const Piece& p);
std::string trace_str(const KnotTrace& t);

// Rebuild a text source from events (used by the fuzzer and shrinker).
std::string front_text(const std::vector<Event>& events, const std::optional<Slot>& mark = std::nullopt,
                       bool labels = false);

}  // namespace lsft

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "lsft/disks.hpp"

// Brute-force disk enumeration by boundary cycles.  A candidate boundary is a
// closed walk of darts that turns only at convex corners and may reuse a dart
// up to maxSheets times.  Winding numbers give the multiplicity of every
// region.  A walk is kept when its total turning is one full turn, the
// multiplicities are consistent at every edge and vertex, and realize() can
// rebuild it as a stack of vertical slices: sheets born at one point, split
// only at cusps, ending on right-going boundary.

namespace lsft {

namespace {

constexpr int OUT = -1;

// LineL runs south, LineR north; LineN/LineS on the scope divide.
enum DartKind { East = 0, West = 1, LineL = 2, LineR = 3, LineN = 4, LineS = 5 };

struct Dart {
    int kind = -1, b = 0, k = 0;  // strands: boundary b, strand k; lines: gap k
    auto operator<=>(const Dart&) const = default;
};

int heading(const Dart& d) {
    switch (d.kind) {
    case East: return 0;
    case LineR:
    case LineN: return 1;
    case West: return 2;
    default: return 3;
    }
}

struct Half {
    Dart out;     // dart leaving along this half-edge (kind -1: none)
    int quad;     // region of the sector ccw after this half-edge
    char corner;  // quadrant letter at a chord vertex
};

enum VertexKind { VCross, VRcusp, VLcusp, VLeft, VRight, VDivide };

struct VertexKey {
    int kind = 0, b = 0, k = 0;
    auto operator<=>(const VertexKey&) const = default;
};

struct Move {
    Dart next;
    bool atVertex = false;
    VertexKey v;
    std::vector<int> sectors;  // indices of covered sectors at v
    int turn = 0;              // quarter turns
    int chord = -1;
    char quad = 0;
};

class Oracle {
public:
    Oracle(const DiskScope& sc, long budget, int maxSheets)
        : sc_(sc), p_(*sc.piece), budget_(budget), maxSheets_(maxSheets) {
        buildRegions();
        buildVertices();
    }

    std::vector<DiskBoundary> run() {
        std::vector<Dart> all = allDarts();
        std::map<Dart, std::vector<Dart>> pred;
        for (auto& d : all) {
            succ_[d] = successors(d);
            for (auto& mv : succ_[d]) pred[mv.next].push_back(d);
        }
        for (auto& d0 : all) {
            start_ = d0;
            // darts that can still return to the start
            back_ = {d0};
            std::vector<Dart> stack = {d0};
            while (!stack.empty()) {
                Dart x = stack.back();
                stack.pop_back();
                for (auto& y : pred[x])
                    if (d0 < y && back_.insert(y).second) stack.push_back(y);
            }
            path_.clear();
            used_.clear();
            dfs(d0);
        }
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    const DiskScope& sc_;
    const Piece& p_;
    long budget_;
    long steps_ = 0;
    std::vector<std::vector<int>> cell_;
    int regions_ = 0;
    std::map<VertexKey, std::vector<int>> sectors_;  // true region per sector
    std::map<Dart, std::vector<Move>> succ_;
    Dart start_;
    std::vector<std::pair<Dart, Move>> path_;
    std::map<Dart, int> used_;
    std::set<Dart> back_;
    int events_[4] = {0, 0, 0, 0};
    int maxSheets_;
    std::set<std::vector<int>> seen_;
    std::vector<DiskBoundary> out_;

    int E() const { return p_.E(); }
    bool scopeDivide(int b) const { return sc_.divide == b && p_.events[b].kind == EventKind::Divide; }
    int cell(int b, int g) const { return cell_[b][g]; }

    void buildRegions() {
        int n = 0;
        std::vector<std::vector<int>> id(E() + 1);
        for (int b = 0; b <= E(); ++b) {
            id[b].resize(p_.width[b] + 1);
            for (auto& x : id[b]) x = n++;
        }
        int outNode = n++;
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int b = 0; b <= E(); ++b) {
            unite(id[b][0], outNode);
            unite(id[b][p_.width[b]], outNode);
        }
        for (int b = 0; b < E(); ++b) {
            const Event& e = p_.events[b];
            int w = p_.width[b], u = e.row;
            switch (e.kind) {
            case EventKind::Crossing:
                for (int g = 0; g <= w; ++g)
                    if (g != u) unite(id[b][g], id[b + 1][g]);
                break;
            case EventKind::LeftCusp:
                for (int g = 0; g <= w; ++g) {
                    if (g < u - 1) unite(id[b][g], id[b + 1][g]);
                    if (g == u - 1) {
                        unite(id[b][g], id[b + 1][u - 1]);
                        unite(id[b][g], id[b + 1][u + 1]);
                    }
                    if (g > u - 1) unite(id[b][g], id[b + 1][g + 2]);
                }
                break;
            case EventKind::RightCusp:
                for (int g = 0; g <= w; ++g) {
                    if (g < u - 1) unite(id[b][g], id[b + 1][g]);
                    if (g == u - 1 || g == u + 1) unite(id[b][g], id[b + 1][u - 1]);
                    if (g > u + 1) unite(id[b][g], id[b + 1][g - 2]);
                }
                break;
            default:
                if (!scopeDivide(b))
                    for (int g = 0; g <= w; ++g) unite(id[b][g], id[b + 1][g]);
            }
        }
        std::map<int, int> remap;
        int outRoot = find(outNode);
        cell_.assign(E() + 1, {});
        for (int b = 0; b <= E(); ++b)
            for (int g = 0; g <= p_.width[b]; ++g) {
                int r = find(id[b][g]);
                if (r == outRoot) {
                    cell_[b].push_back(OUT);
                    continue;
                }
                auto it = remap.find(r);
                if (it == remap.end()) it = remap.emplace(r, static_cast<int>(remap.size())).first;
                cell_[b].push_back(it->second);
            }
        regions_ = static_cast<int>(remap.size());
    }

    std::vector<Half> crossingHalves(int b) const {
        int r = p_.events[b].row;
        return {
            {Dart{East, b + 1, r}, cell(b, r - 1), 'T'},
            {Dart{West, b, r}, cell(b, r), 'L'},
            {Dart{West, b, r + 1}, cell(b, r + 1), 'B'},
            {Dart{East, b + 1, r + 1}, cell(b + 1, r), 'R'},
        };
    }

    // Only the inner quadrant of a right cusp can be covered.
    std::vector<Half> rcuspHalves(int b) const {
        int u = p_.events[b].row;
        return {
            {Dart{}, OUT, 'T'},
            {Dart{West, b, u}, cell(b, u), 'L'},
            {Dart{West, b, u + 1}, OUT, 'B'},
            {Dart{}, OUT, 'R'},
        };
    }

    std::vector<Half> dividePoint(int b, int k) const {
        return {
            {Dart{East, b + 1, k}, cell(b + 1, k - 1), 0},
            {Dart{LineN, b, k - 1}, cell(b, k - 1), 0},
            {Dart{West, b, k}, cell(b, k), 0},
            {Dart{LineS, b, k}, cell(b + 1, k), 0},
        };
    }

    std::vector<Half> leftPoint(int k) const {
        return {
            {Dart{East, 0, k}, cell(0, k - 1), 0},
            {Dart{}, OUT, 0},
            {Dart{LineL, 0, k}, cell(0, k), 0},
        };
    }

    std::vector<Half> rightPoint(int k) const {
        int e = E();
        return {
            {Dart{LineR, e, k - 1}, cell(e, k - 1), 0},
            {Dart{West, e, k}, cell(e, k), 0},
            {Dart{}, OUT, 0},
        };
    }

    void buildVertices() {
        auto quads = [](const std::vector<Half>& hs) {
            std::vector<int> q;
            for (auto& h : hs) q.push_back(h.quad);
            return q;
        };
        for (int b = 0; b < E(); ++b) {
            const Event& e = p_.events[b];
            if (e.kind == EventKind::Crossing) sectors_[{VCross, b, 0}] = quads(crossingHalves(b));
            if (e.kind == EventKind::RightCusp) sectors_[{VRcusp, b, 0}] = quads(rcuspHalves(b));
            if (e.kind == EventKind::LeftCusp) sectors_[{VLcusp, b, 0}] = {cell(b + 1, e.row), cell(b, e.row - 1)};
            if (scopeDivide(b))
                for (int k = 1; k <= p_.width[b]; ++k) sectors_[{VDivide, b, k}] = quads(dividePoint(b, k));
        }
        if (p_.leftLine)
            for (int k = 1; k <= p_.width[0]; ++k) sectors_[{VLeft, 0, k}] = quads(leftPoint(k));
        if (p_.rightLine)
            for (int k = 1; k <= p_.width[E()]; ++k) sectors_[{VRight, E(), k}] = quads(rightPoint(k));
    }

    std::vector<Dart> allDarts() const {
        std::vector<Dart> ds;
        for (int b = 0; b <= E(); ++b)
            for (int k = 1; k <= p_.width[b]; ++k) {
                ds.push_back({East, b, k});
                ds.push_back({West, b, k});
            }
        if (p_.leftLine)
            for (int g = 1; g < p_.width[0]; ++g) ds.push_back({LineL, 0, g});
        if (p_.rightLine)
            for (int g = 1; g < p_.width[E()]; ++g) ds.push_back({LineR, E(), g});
        if (sc_.divide >= 0 && scopeDivide(sc_.divide))
            for (int g = 1; g < p_.width[sc_.divide]; ++g) {
                ds.push_back({LineN, sc_.divide, g});
                ds.push_back({LineS, sc_.divide, g});
            }
        std::sort(ds.begin(), ds.end());
        return ds;
    }

    // Corner turns (one sector) and straight passes (two sectors).
    void vertexMoves(std::vector<Move>& out, const Dart& in, VertexKey v, const std::vector<Half>& h, int arrive,
                     int chord, int maxSweep) const {
        int m = static_cast<int>(h.size());
        for (int s = 1; s <= maxSweep; ++s) {
            Move mv;
            mv.atVertex = true;
            mv.v = v;
            bool ok = true;
            for (int x = 1; x <= s; ++x) {
                int q = ((arrive - x) % m + m) % m;
                if (h[q].quad == OUT) ok = false;
                mv.sectors.push_back(q);
            }
            int j = ((arrive - s) % m + m) % m;
            if (!ok || h[j].out.kind < 0) continue;
            mv.next = h[j].out;
            int diff = ((heading(mv.next) - heading(in)) % 4 + 4) % 4;
            mv.turn = diff == 3 ? -1 : diff;
            if (s == 1 && chord >= 0) {
                mv.chord = chord;
                mv.quad = h[j].corner;
            }
            out.push_back(mv);
        }
    }

    std::vector<Move> successors(const Dart& d) const {
        std::vector<Move> out;
        auto plain = [&](Dart nx) {
            Move mv;
            mv.next = nx;
            out.push_back(mv);
        };
        if (d.kind == East) {
            int b = d.b, k = d.k;
            if (b == E()) {
                if (p_.rightLine) vertexMoves(out, d, {VRight, b, k}, rightPoint(k), 1, -1, 2);
                return out;
            }
            const Event& e = p_.events[b];
            int u = e.row;
            switch (e.kind) {
            case EventKind::Crossing:
                if (k == u || k == u + 1)
                    vertexMoves(out, d, {VCross, b, 0}, crossingHalves(b), k == u ? 1 : 2, e.label, 2);
                else
                    plain({East, b + 1, k});
                break;
            case EventKind::LeftCusp: plain({East, b + 1, k < u ? k : k + 2}); break;
            case EventKind::RightCusp:
                if (k == u || k == u + 1)
                    vertexMoves(out, d, {VRcusp, b, 0}, rcuspHalves(b), k == u ? 1 : 2, e.label, 1);
                else
                    plain({East, b + 1, k < u ? k : k - 2});
                break;
            default:
                if (scopeDivide(b))
                    vertexMoves(out, d, {VDivide, b, k}, dividePoint(b, k), 2, -1, 2);
                else
                    plain({East, b + 1, k});
            }
            return out;
        }
        if (d.kind == West) {
            int b = d.b, k = d.k;
            if (b == 0) {
                if (p_.leftLine) vertexMoves(out, d, {VLeft, 0, k}, leftPoint(k), 0, -1, 2);
                return out;
            }
            const Event& e = p_.events[b - 1];
            int u = e.row;
            switch (e.kind) {
            case EventKind::Crossing:
                if (k == u || k == u + 1)
                    vertexMoves(out, d, {VCross, b - 1, 0}, crossingHalves(b - 1), k == u ? 0 : 3, e.label, 2);
                else
                    plain({West, b - 1, k});
                break;
            case EventKind::LeftCusp:
                if (k == u || k == u + 1) {
                    Move mv;
                    mv.next = Dart{East, b, k == u ? u + 1 : u};
                    mv.atVertex = true;
                    mv.v = {VLcusp, b - 1, 0};
                    mv.sectors = {k == u ? 0 : 1};
                    mv.turn = k == u ? 2 : -2;
                    out.push_back(mv);
                } else {
                    plain({West, b - 1, k < u ? k : k - 2});
                }
                break;
            case EventKind::RightCusp: plain({West, b - 1, k < u ? k : k + 2}); break;
            default:
                if (scopeDivide(b - 1))
                    vertexMoves(out, d, {VDivide, b - 1, k}, dividePoint(b - 1, k), 0, -1, 2);
                else
                    plain({West, b - 1, k});
            }
            return out;
        }
        if (d.kind == LineL) vertexMoves(out, d, {VLeft, 0, d.k + 1}, leftPoint(d.k + 1), 1, -1, 2);
        if (d.kind == LineR) vertexMoves(out, d, {VRight, E(), d.k}, rightPoint(d.k), 2, -1, 2);
        if (d.kind == LineN) vertexMoves(out, d, {VDivide, d.b, d.k}, dividePoint(d.b, d.k), 3, -1, 2);
        if (d.kind == LineS) vertexMoves(out, d, {VDivide, d.b, d.k + 1}, dividePoint(d.b, d.k + 1), 1, -1, 2);
        return out;
    }

    // Slice events of a move: 1 birth, 2 split, 3 death (see realize).
    static int sliceEvent(const Dart& d, const Move& mv) {
        if (d.kind == West && mv.next.kind == East) return mv.turn == 2 ? 1 : 2;
        if (d.kind == West && mv.next.kind >= LineL) return 1;
        if (d.kind == East && mv.next.kind != East) return 3;
        return 0;
    }

    void dfs(const Dart& d) {
        if (++steps_ > budget_) throw BudgetError("BudgetExceeded: oracle search over " + std::to_string(budget_) + " steps");
        ++used_[d];
        for (const Move& mv : succ_.at(d)) {
            int ev = sliceEvent(d, mv);
            ++events_[ev];
            // one birth; every sheet dies once; no edge under more sheets than exist
            if (events_[1] <= 1 && events_[3] <= maxSheets_ && events_[2] < maxSheets_) {
                path_.push_back({d, mv});
                if (mv.next == start_) {
                    DiskBoundary disk;
                    if (accept(disk) && seen_.insert(canonical()).second) out_.push_back(disk);
                }
                if (!(mv.next < start_) && used_[mv.next] < maxSheets_ && back_.count(mv.next)) dfs(mv.next);
                path_.pop_back();
            }
            --events_[ev];
        }
        --used_[d];
    }

    // Smallest rotation of the closed walk, so repeated starts count once.
    std::vector<int> canonical() const {
        std::vector<std::vector<int>> steps;
        for (auto& [d, mv] : path_) {
            std::vector<int> x = {d.kind, d.b, d.k, mv.next.kind, mv.next.b, mv.next.k};
            x.insert(x.end(), mv.sectors.begin(), mv.sectors.end());
            x.push_back(-9);
            steps.push_back(x);
        }
        std::vector<int> best;
        for (size_t r = 0; r < steps.size(); ++r) {
            std::vector<int> flat;
            for (size_t a = 0; a < steps.size(); ++a) {
                auto& x = steps[(r + a) % steps.size()];
                flat.insert(flat.end(), x.begin(), x.end());
            }
            if (best.empty() || flat < best) best = flat;
        }
        return best;
    }

    // Rebuilds the disk from the walk as vertical slices.  Each slice is a set
    // of sheets (top track on a West run, bottom track on an East run).  Sheets
    // are born at inner left cusps and at line segments entered from a West
    // run, split at outer left cusps, and die at right cusps and at segments
    // entered from an East run.  With no merges the disk is a tree of sheets,
    // so it is a disk exactly when there is one birth and every death closes
    // the walk between the two tracks of the dying sheet.
    bool realize() const {
        int n = static_cast<int>(path_.size());
        auto idx = [&](int i) { return ((i % n) + n) % n; };
        auto at = [&](int i) -> const Dart& { return path_[idx(i)].first; };
        auto skipLines = [&](int i) {
            int j = idx(i + 1);
            while (at(j).kind >= LineL) j = idx(j + 1);
            return j;
        };
        using Sheet = std::pair<int, int>;
        std::vector<std::vector<Sheet>> births(E() + 1), splits(E() + 1);
        int nBirth = 0;
        for (int i = 0; i < n; ++i) {
            if (at(i).kind != West) continue;
            int j = skipLines(i);
            if (at(j).kind != East) continue;
            bool viaLine = at(i + 1).kind >= LineL;
            if (viaLine || path_[i].second.turn == 2) {
                births[at(j).b].push_back({i, j});
                ++nBirth;
            } else {
                splits[at(j).b].push_back({i, j});
            }
        }
        if (nBirth != 1) return false;

        std::vector<std::vector<int>> occ(E() + 1);
        for (int i = 0; i < n; ++i)
            if (at(i).kind <= West) occ[at(i).b].push_back(i);

        std::function<bool(int, std::vector<Sheet>)> go = [&](int c, std::vector<Sheet> sheets) -> bool {
            std::vector<int> members;
            for (auto& [t, b] : sheets) {
                if (at(t).kind != West || at(b).kind != East || at(t).b != c || at(b).b != c) return false;
                if (at(t).k >= at(b).k) return false;
                members.push_back(t);
                members.push_back(b);
            }
            std::sort(members.begin(), members.end());
            if (members != occ[c]) return false;
            if (c == E()) {
                for (auto& [t, b] : sheets)
                    if (skipLines(b) != t) return false;
                return true;
            }
            std::vector<Sheet> nxt;
            for (auto& [t, b] : sheets) {
                bool bc = at(b + 1).kind == East && at(b + 1).b == c + 1;
                bool tc = at(t - 1).kind == West && at(t - 1).b == c + 1;
                if (bc != tc) return false;
                if (bc)
                    nxt.push_back({idx(t - 1), idx(b + 1)});
                else if (skipLines(b) != t)
                    return false;
            }
            for (auto& s : births[c + 1]) nxt.push_back(s);
            const auto& sp = splits[c + 1];
            std::function<bool(size_t, std::vector<Sheet>)> split = [&](size_t k, std::vector<Sheet> cur) -> bool {
                if (k == sp.size()) return go(c + 1, cur);
                auto [w, e] = sp[k];
                int lo = at(e).k, hi = at(w).k;
                for (size_t x = 0; x < cur.size(); ++x) {
                    auto [t, b] = cur[x];
                    if (at(t).k >= lo || at(b).k <= hi) continue;
                    std::vector<Sheet> alt = cur;
                    alt[x] = {t, e};
                    alt.push_back({w, b});
                    if (split(k + 1, alt)) return true;
                }
                return false;
            };
            return split(0, nxt);
        };
        return go(0, births[0]);
    }

    bool accept(DiskBoundary& out) const {
        int turning = 0;
        for (auto& [d, mv] : path_) turning += mv.turn;
        if (turning != 4) return false;

        // multiplicities from winding numbers, column by column
        std::map<std::pair<int, int>, int> east, west;
        std::map<Dart, int> lines;
        for (auto& [d, mv] : path_) {
            if (d.kind == East) ++east[{d.b, d.k}];
            if (d.kind == West) ++west[{d.b, d.k}];
            if (d.kind >= LineL) ++lines[d];
        }
        auto count = [](const std::map<std::pair<int, int>, int>& m, int b, int k) {
            auto it = m.find({b, k});
            return it == m.end() ? 0 : it->second;
        };
        auto lineCount = [&](Dart d) {
            auto it = lines.find(d);
            return it == lines.end() ? 0 : it->second;
        };
        std::vector<int> mult(regions_, -1);
        auto setMult = [&](int region, int v) {
            if (region == OUT) return v == 0;
            if (mult[region] < 0) mult[region] = v;
            return mult[region] == v;
        };
        for (int b = 0; b <= E(); ++b) {
            int v = 0;
            for (int k = 1; k <= p_.width[b]; ++k) {
                int e = count(east, b, k), w = count(west, b, k);
                if (v - e < 0) return false;
                v -= e - w;
                if (v < 0 || v - w < 0) return false;
                if (!setMult(cell(b, k), v)) return false;
            }
            if (v != 0) return false;
        }
        auto M = [&](int region) { return region == OUT ? 0 : mult[region]; };
        if (p_.leftLine)
            for (int g = 1; g < p_.width[0]; ++g)
                if (M(cell(0, g)) != lineCount({LineL, 0, g})) return false;
        if (p_.rightLine)
            for (int g = 1; g < p_.width[E()]; ++g)
                if (M(cell(E(), g)) != lineCount({LineR, E(), g})) return false;
        if (sc_.divide >= 0 && scopeDivide(sc_.divide)) {
            int b = sc_.divide;
            for (int g = 1; g < p_.width[b]; ++g) {
                int n = lineCount({LineN, b, g}), s = lineCount({LineS, b, g});
                int mw = M(cell(b, g)), me = M(cell(b + 1, g));
                if (mw - me != n - s || mw - n < 0) return false;
            }
        }
        // every vertex splits into whole sheets
        std::map<VertexKey, std::vector<int>> covered;
        for (auto& [d, mv] : path_) {
            if (!mv.atVertex) continue;
            auto& c = covered[mv.v];
            if (c.empty()) c.assign(sectors_.at(mv.v).size(), 0);
            for (int q : mv.sectors) ++c[q];
        }
        for (auto& [v, regs] : sectors_) {
            auto it = covered.find(v);
            int base = -1;
            for (size_t q = 0; q < regs.size(); ++q) {
                int c = M(regs[q]) - (it == covered.end() ? 0 : it->second[q]);
                if (c < 0 || (base >= 0 && c != base)) return false;
                base = c;
            }
        }

        if (!realize()) return false;

        DiskBoundary disk;
        for (auto& [d, mv] : path_)
            if (mv.chord >= 0) disk.corners.push_back(Corner{mv.chord, mv.quad});
        // line runs, starting the reading on a strand dart
        std::vector<Dart> cyc;
        for (auto& [d, mv] : path_) cyc.push_back(d);
        auto isLine = [](const Dart& d) { return d.kind >= LineL; };
        size_t start = 0;
        while (start < cyc.size() && isLine(cyc[start])) ++start;
        if (start == cyc.size()) return false;
        std::rotate(cyc.begin(), cyc.begin() + start, cyc.end());
        int onDivide = 0, onLeft = 0, onRight = 0;
        for (size_t a = 0; a < cyc.size();) {
            if (!isLine(cyc[a])) {
                ++a;
                continue;
            }
            int kind = cyc[a].kind;
            int lo = cyc[a].k, hi = lo;
            size_t c = a + 1;
            while (c < cyc.size() && cyc[c].kind == kind) {
                lo = std::min(lo, cyc[c].k);
                hi = std::max(hi, cyc[c].k);
                ++c;
            }
            bool mid = kind == LineN || kind == LineS;
            if (mid) {
                if (sc_.mode == DivideMode::End && kind != LineN) return false;
                if (sc_.mode == DivideMode::Start && kind != LineS) return false;
            }
            disk.segments.push_back(Segment{kind == LineL ? 1 : kind == LineR ? 2 : 3, lo, hi + 1, mid});
            onDivide += mid;
            onLeft += kind == LineL;
            onRight += kind == LineR;
            a = c;
        }
        if (sc_.divide >= 0 && sc_.mode != DivideMode::Transparent) {
            if (onDivide != 1) return false;
            for (auto& s : disk.segments)
                if (s.side == 3 && (s.i != sc_.di || s.j != sc_.dj)) return false;
        }
        if (onLeft && !sc_.leftStarts) return false;
        if (onRight && !sc_.rightEnds) return false;
        if (p_.mark) {
            int b = p_.mark->b, k = p_.mark->pos, dir = p_.dir[b][k];
            disk.t += dir * (count(west, b, k) - count(east, b, k));
        }
        int ends = 0;
        for (auto& c : disk.corners) ends += (c.quad == 'L');
        disk.sheets = ends + onRight + (sc_.mode == DivideMode::End ? 1 : 0);
        std::sort(disk.corners.begin(), disk.corners.end());
        std::sort(disk.segments.begin(), disk.segments.end());
        out = disk;
        return true;
    }
};

}  // namespace

std::vector<DiskBoundary> oracle_disks(const DiskScope& scope, long budget, int maxSheets) {
    if (!scope.piece) throw MathError("no piece");
    Oracle o(scope, budget, maxSheets);
    return o.run();
}

}  // namespace lsft

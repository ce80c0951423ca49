#include "lsft/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lsft {

namespace {

std::vector<std::string> splitLines(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == '\n' || c == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    std::vector<std::string> clean;
    for (auto s : out) {
        auto h = s.find('#');
        if (h != std::string::npos) s = s.substr(0, h);
        std::istringstream is(s);
        std::string w, joined;
        while (is >> w) joined += (joined.empty() ? "" : " ") + w;
        if (!joined.empty()) clean.push_back(joined);
    }
    return clean;
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> w;
    std::string x;
    while (is >> x) w.push_back(x);
    return w;
}

int toInt(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw DiagramError("MalformedInput", "bad integer '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        throw DiagramError("MalformedInput", "bad integer '" + s + "'");
    }
}

struct Step {
    Slot s;
    int d;
    int turn = 0;  // +1 down (upper to lower), -1 up, 0 none
};

// Move one step along the knot from slot s travelling in direction d.
Step step(const Piece& p, Slot s, int d, std::vector<Site>* out) {
    auto emit = [&](Site x) {
        if (out) out->push_back(x);
    };
    int E = p.E();
    Step r{s, d, 0};
    if (d > 0) {
        if (s.b == E) {
            if (!p.rightLine) throw DiagramError("MalformedInput", "strand leaves the diagram on the right");
            int j = p.pairR.at(s.pos);
            emit(Site{Site::Jump, -1, 0, 0, 2, s.pos, j});
            r = {{E, j}, -1, 0};
        } else {
            const Event& e = p.events[s.b];
            int pos = s.pos, u = e.row;
            switch (e.kind) {
            case EventKind::Crossing:
                if (pos == u) {
                    emit(Site{Site::Chord, e.label, -1, 315});
                    pos = u + 1;
                } else if (pos == u + 1) {
                    emit(Site{Site::Chord, e.label, +1, 45});
                    pos = u;
                }
                r = {{s.b + 1, pos}, 1, 0};
                break;
            case EventKind::LeftCusp:
                r = {{s.b + 1, pos < u ? pos : pos + 2}, 1, 0};
                break;
            case EventKind::RightCusp:
                if (pos == u) {
                    emit(Site{Site::Chord, e.label, -1, 315});
                    emit(Site{Site::Chord, e.label, +1, 225});
                    r = {{s.b, u + 1}, -1, +1};
                } else if (pos == u + 1) {
                    emit(Site{Site::Chord, e.label, +1, 45});
                    emit(Site{Site::Chord, e.label, -1, 135});
                    r = {{s.b, u}, -1, -1};
                } else {
                    r = {{s.b + 1, pos < u ? pos : pos - 2}, 1, 0};
                }
                break;
            default:
                r = {{s.b + 1, pos}, 1, 0};
            }
        }
    } else {
        if (s.b == 0) {
            if (!p.leftLine) throw DiagramError("MalformedInput", "strand leaves the diagram on the left");
            int j = p.pairL.at(s.pos);
            emit(Site{Site::Jump, -1, 0, 0, 1, s.pos, j});
            r = {{0, j}, 1, 0};
        } else {
            const Event& e = p.events[s.b - 1];
            int pos = s.pos, u = e.row;
            switch (e.kind) {
            case EventKind::Crossing:
                if (pos == u) {
                    emit(Site{Site::Chord, e.label, +1, 225});
                    pos = u + 1;
                } else if (pos == u + 1) {
                    emit(Site{Site::Chord, e.label, -1, 135});
                    pos = u;
                }
                r = {{s.b - 1, pos}, -1, 0};
                break;
            case EventKind::LeftCusp:
                if (pos == u)
                    r = {{s.b, u + 1}, 1, +1};
                else if (pos == u + 1)
                    r = {{s.b, u}, 1, -1};
                else
                    r = {{s.b - 1, pos < u ? pos : pos - 2}, -1, 0};
                break;
            case EventKind::RightCusp:
                r = {{s.b - 1, pos < u ? pos : pos + 2}, -1, 0};
                break;
            default:
                r = {{s.b - 1, pos}, -1, 0};
            }
        }
    }
    if (out && ((r.s.b == 0 && p.leftLine) || (r.s.b == E && p.rightLine))) {
        int side = (r.s.b == 0 && p.leftLine) ? 1 : 2;
        out->push_back(Site{Site::Point, -1, 0, 0, side, r.s.pos, 0});
    }
    return r;
}

int totalSlots(const Piece& p) {
    int n = 0;
    for (int w : p.width) n += w;
    return n;
}

std::vector<int> computeWidths(const std::vector<Event>& ev, int start) {
    std::vector<int> w{start};
    for (auto& e : ev) {
        int m = w.back();
        if (e.kind == EventKind::LeftCusp) m += 2;
        if (e.kind == EventKind::RightCusp) m -= 2;
        w.push_back(m);
    }
    return w;
}

// Structural checks shared by parse_front and validate.
void checkEvents(const std::vector<Event>& ev, ValidationReport& rep, bool stopAtFirst) {
    auto fail = [&](const std::string& kind, const std::string& msg) {
        rep.ok = false;
        rep.violations.push_back(kind + ": " + msg);
        if (stopAtFirst) throw DiagramError(kind, msg);
    };
    if (ev.empty()) fail("MalformedInput", "empty event list");
    int m = 0;
    bool seenRight = false;
    std::set<int> labels;
    std::vector<int> orig;  // strand positions in the column before the first right cusp
    for (size_t k = 0; k < ev.size(); ++k) {
        const Event& e = ev[k];
        std::string where = "event " + std::to_string(k + 1);
        switch (e.kind) {
        case EventKind::LeftCusp:
            if (e.row < 1 || e.row > m + 1) fail("RowOutOfRange", where);
            if (seenRight) fail("NonSimpleFront", where + ": left cusp after a right cusp");
            m += 2;
            break;
        case EventKind::Crossing:
            if (e.row < 1 || e.row + 1 > m) fail("RowOutOfRange", where);
            if (seenRight) fail("NonSimpleFront", where + ": crossing after a right cusp");
            break;
        case EventKind::RightCusp:
            if (e.row < 1 || e.row + 1 > m) {
                fail("RowOutOfRange", where);
            } else {
                if (!seenRight)
                    for (int k = 1; k <= m; ++k) orig.push_back(k);
                // cusps sharing one x-coordinate cannot nest
                if (orig.size() == static_cast<size_t>(m)) {
                    int a = orig[e.row - 1], c = orig[e.row];
                    if (a % 2 != 1 || c != a + 1) fail("NonSimpleFront", where + ": nested right cusp");
                    orig.erase(orig.begin() + (e.row - 1), orig.begin() + (e.row + 1));
                }
            }
            seenRight = true;
            m -= 2;
            break;
        case EventKind::Divide:
            if (seenRight) fail("NonSimpleFront", where + ": dividing line after a right cusp");
            if (m == 0) fail("MalformedInput", where + ": dividing line outside the knot");
            break;
        case EventKind::Mark:
            if (e.row < 1 || e.row > m) fail("RowOutOfRange", where);
            break;
        }
        if (e.label >= 0 && !labels.insert(e.label).second) fail("DuplicateLabel", std::to_string(e.label));
    }
    if (m != 0) fail("MalformedInput", "strand count does not return to 0");
}

void assignLabels(std::vector<Event>& ev) {
    std::set<int> used;
    for (auto& e : ev)
        if (e.label >= 0) used.insert(e.label);
    int next = 0;
    auto fresh = [&]() {
        while (used.count(next)) ++next;
        used.insert(next);
        return next;
    };
    for (auto& e : ev)
        if (e.kind == EventKind::Crossing && e.label < 0) e.label = fresh();
    // right cusps top to bottom, by position in the column before the first right cusp
    std::vector<int> orig;
    int m = 0;
    for (auto& e : ev) {
        if (e.kind == EventKind::RightCusp) break;
        if (e.kind == EventKind::LeftCusp) m += 2;
    }
    for (int k = 1; k <= m; ++k) orig.push_back(k);
    std::vector<std::pair<int, Event*>> rc;
    for (auto& e : ev) {
        if (e.kind != EventKind::RightCusp) continue;
        rc.push_back({orig[e.row - 1], &e});
        orig.erase(orig.begin() + (e.row - 1), orig.begin() + (e.row + 1));
    }
    std::sort(rc.begin(), rc.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (auto& [o, e] : rc)
        if (e->label < 0) e->label = fresh();
}

// Walk the closed piece from `start` and fill orientation, potential, and invariants.
void orientClosed(FrontDiagram& d) {
    Piece& p = d.whole;
    int E = p.E();
    p.mu.assign(E + 1, {});
    p.dir.assign(E + 1, {});
    for (int b = 0; b <= E; ++b) {
        p.mu[b].assign(p.width[b] + 1, 0);
        p.dir[b].assign(p.width[b] + 1, 0);
    }
    std::vector<std::vector<char>> seen(E + 1);
    for (int b = 0; b <= E; ++b) seen[b].assign(p.width[b] + 1, 0);

    // potential: walk rightwards from the top arc after the first event
    Slot s{1, 1};
    int d0 = 1, mu = 0, visited = 0;
    do {
        if (!seen[s.b][s.pos]) {
            seen[s.b][s.pos] = 1;
            p.mu[s.b][s.pos] = mu;
            ++visited;
        }
        Step st = step(p, s, d0, nullptr);
        mu -= st.turn;
        s = st.s;
        d0 = st.d;
    } while (!(s == Slot{1, 1} && d0 == 1));
    if (visited != totalSlots(p)) throw DiagramError("MultiComponent", "tracing strands yields more than one component");
    p.muModulus = std::abs(mu);

    // orientation, rotation and writhe
    int dir = d.flip ? -1 : 1;
    s = {1, 1};
    int down = 0, up = 0;
    do {
        p.dir[s.b][s.pos] = dir;
        Step st = step(p, s, dir, nullptr);
        if (st.turn > 0) ++down;
        if (st.turn < 0) ++up;
        s = st.s;
        dir = st.d;
    } while (!(s == Slot{1, 1}));
    d.rot = (down - up) / 2;
    int writhe = 0, rc = 0;
    for (int b = 0; b < E; ++b) {
        const Event& e = p.events[b];
        if (e.kind == EventKind::RightCusp) ++rc;
        if (e.kind != EventKind::Crossing) continue;
        writhe += p.dir[b][e.row] == p.dir[b][e.row + 1] ? 1 : -1;
    }
    d.tb = writhe - rc;
}

}  // namespace

std::vector<int> Piece::chordLabels() const {
    std::vector<int> r;
    for (auto& e : events)
        if (e.kind == EventKind::Crossing || e.kind == EventKind::RightCusp) r.push_back(e.label);
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> Piece::rightCuspLabels() const {
    std::vector<int> r;
    for (auto& e : events)
        if (e.kind == EventKind::RightCusp) r.push_back(e.label);
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> Piece::divideEvents() const {
    std::vector<int> r;
    for (int k = 0; k < E(); ++k)
        if (events[k].kind == EventKind::Divide) r.push_back(k);
    return r;
}

int Piece::pointMu(int side, int i) const { return side == 1 ? mu.front().at(i) : mu.back().at(i); }

bool is_middle_text(const std::string& text) {
    auto lines = splitLines(text);
    return !lines.empty() && lines[0] == "middle v1";
}

FrontDiagram parse_front(const std::string& text, bool flip) {
    auto lines = splitLines(text);
    if (lines.empty() || lines[0] != "front v1") throw DiagramError("MalformedInput", "missing 'front v1' header");
    std::vector<Event> raw;
    for (size_t k = 1; k < lines.size(); ++k) {
        auto w = words(lines[k]);
        Event e{};
        if (w[0] == "lcusp" && w.size() == 2)
            e = {EventKind::LeftCusp, toInt(w[1])};
        else if (w[0] == "rcusp" && w.size() == 2)
            e = {EventKind::RightCusp, toInt(w[1])};
        else if (w[0] == "cross" && (w.size() == 2 || w.size() == 3))
            e = {EventKind::Crossing, toInt(w[1]), w.size() == 3 ? toInt(w[2]) : -1};
        else if (w[0] == "divide" && w.size() == 1)
            e = {EventKind::Divide, 0};
        else if (w[0] == "mark" && w.size() == 2)
            e = {EventKind::Mark, toInt(w[1])};
        else
            throw DiagramError("MalformedInput", "line '" + lines[k] + "'");
        if (e.label < -1 || (e.label >= 0 && e.kind != EventKind::Crossing))
            throw DiagramError("MalformedInput", "bad label on line '" + lines[k] + "'");
        raw.push_back(e);
    }
    ValidationReport rep;
    checkEvents(raw, rep, true);

    FrontDiagram d;
    d.flip = flip;
    int marks = 0;
    for (auto& e : raw) {
        if (e.kind == EventKind::Mark) {
            if (++marks > 1) throw DiagramError("MalformedInput", "more than one mark");
            d.mark = Slot{static_cast<int>(d.events.size()), e.row};
        } else {
            d.events.push_back(e);
        }
    }
    if (d.events.empty()) throw DiagramError("MalformedInput", "no events");
    assignLabels(d.events);
    d.whole.events = d.events;
    d.whole.width = computeWidths(d.events, 0);
    orientClosed(d);
    auto dv = d.whole.divideEvents();
    if (d.mark)
        d.whole.mark = d.mark;
    else if (!dv.empty())
        d.whole.mark = Slot{dv.front(), 1};
    return d;
}

ValidationReport validate(const FrontDiagram& d) {
    ValidationReport rep;
    std::vector<Event> ev = d.events;
    try {
        checkEvents(ev, rep, false);
    } catch (const DiagramError&) {
    }
    if (rep.ok) {
        FrontDiagram copy = d;
        try {
            orientClosed(copy);
        } catch (const DiagramError& e) {
            rep.ok = false;
            rep.violations.push_back(e.what());
        }
    }
    return rep;
}

bool pairing_connectivity(const std::vector<int>& bl, const std::vector<int>& br) {
    int n = static_cast<int>(bl.size()) - 1;
    if (n < 0 || static_cast<int>(br.size()) != n + 1) throw DiagramError("NotInvolution", "size mismatch");
    for (const auto* inv : {&bl, &br})
        for (int i = 1; i <= n; ++i) {
            int j = (*inv)[i];
            if (j < 1 || j > n || j == i || (*inv)[j] != i) throw DiagramError("NotInvolution", "point " + std::to_string(i));
        }
    if (n == 0) return true;
    std::set<int> seen{1};
    int x = 1;
    bool right = true;
    while (true) {
        x = right ? br[x] : bl[x];
        right = !right;
        if (x == 1) break;
        seen.insert(x);
    }
    return static_cast<int>(seen.size()) == n;
}

MiddleData parse_middle(const std::string& text) {
    auto lines = splitLines(text);
    if (lines.empty() || lines[0] != "middle v1") throw DiagramError("MalformedInput", "missing 'middle v1' header");
    MiddleData m;
    for (size_t k = 1; k < lines.size(); ++k) {
        auto w = words(lines[k]);
        if (w[0] == "n" && w.size() == 2) {
            m.n = toInt(w[1]);
            if (m.n < 0) throw DiagramError("MalformedInput", "negative n");
            m.betaL.assign(m.n + 1, 0);
            m.betaR.assign(m.n + 1, 0);
            m.mu.assign(m.n + 1, 0);
        } else if ((w[0] == "pairL" || w[0] == "pairR" || w[0] == "mu") && w.size() == 3) {
            if (m.betaL.empty()) throw DiagramError("MalformedInput", "'n' must come first");
            int i = toInt(w[1]), j = toInt(w[2]);
            if (i < 1 || i > m.n) throw DiagramError("RowOutOfRange", lines[k]);
            if (w[0] == "mu") {
                m.mu[i] = j;
                continue;
            }
            if (j < 1 || j > m.n || i == j) throw DiagramError("RowOutOfRange", lines[k]);
            auto& b = w[0] == "pairL" ? m.betaL : m.betaR;
            if (b[i] || b[j]) throw DiagramError("NotInvolution", lines[k]);
            b[i] = j;
            b[j] = i;
        } else {
            throw DiagramError("MalformedInput", "line '" + lines[k] + "'");
        }
    }
    if (m.n % 2) throw DiagramError("MalformedInput", "n must be even");
    if (!pairing_connectivity(m.betaL, m.betaR)) throw DiagramError("Disconnected", "pairings do not form one loop");
    return m;
}

std::vector<std::vector<int>> maslov_potential(const FrontDiagram& d) { return d.whole.mu; }

std::pair<int, int> classical_invariants(const FrontDiagram& d) { return {d.tb, d.rot}; }

Piece window(const FrontDiagram& d, int lo, int hi) {
    const Piece& W = d.whole;
    int E = W.E();
    int b0 = lo < 0 ? 0 : lo + 1;
    int b1 = hi < 0 ? E : hi;
    if (b1 < b0) throw DiagramError("MalformedInput", "window bounds out of order");
    Piece p;
    p.leftLine = lo >= 0;
    p.rightLine = hi >= 0;
    p.eventOffset = b0;
    p.muModulus = W.muModulus;
    for (int k = b0; k < b1; ++k) p.events.push_back(W.events[k]);
    std::vector<int> bmap;  // piece boundary -> full boundary
    for (int b = b0; b <= b1; ++b) bmap.push_back(b);
    if (p.events.empty()) {
        p.events.push_back(Event{EventKind::Divide, 0});
        bmap.push_back(b0);
    }
    for (int b : bmap) {
        p.width.push_back(W.width[b]);
        p.mu.push_back(W.mu[b]);
        p.dir.push_back(W.dir[b]);
    }
    auto inside = [&](int b) { return b >= b0 && b <= b1; };

    // pairings: follow the closed knot outside the window
    int nL = p.width.front(), nR = p.width.back();
    p.pairL.assign(nL + 1, 0);
    p.pairR.assign(nR + 1, 0);
    auto pairFrom = [&](int b, int pos, int dOut) {
        Slot s{b, pos};
        int dd = dOut;
        do {
            Step st = step(W, s, dd, nullptr);
            s = st.s;
            dd = st.d;
        } while (!inside(s.b) || (s.b != b));
        return s.pos;
    };
    if (p.leftLine)
        for (int i = 1; i <= nL; ++i) p.pairL[i] = pairFrom(b0, i, -1);
    if (p.rightLine)
        for (int i = 1; i <= nR; ++i) p.pairR[i] = pairFrom(b1, i, +1);

    if (W.mark) {
        Slot m = *W.mark;
        if (inside(m.b)) {
            p.mark = Slot{m.b - b0, m.pos};
        } else {
            Slot s = m;
            int dd = W.dir[m.b][m.pos];
            while (true) {
                Step st = step(W, s, dd, nullptr);
                s = st.s;
                dd = st.d;
                if (inside(s.b)) break;
            }
            p.anchorSide = dd > 0 ? 1 : 2;
            p.anchorPoint = s.pos;
        }
    }
    return p;
}

Piece trivial_piece(const MiddleData& m) {
    Piece p;
    p.events.push_back(Event{EventKind::Divide, 0});
    p.width = {m.n, m.n};
    p.leftLine = p.rightLine = true;
    p.pairL = m.betaL;
    p.pairR = m.betaR;
    p.mu = {m.mu, m.mu};
    p.dir.assign(2, std::vector<int>(m.n + 1, 0));
    p.anchorSide = 1;
    p.anchorPoint = 1;
    if (m.n > 0) {
        Slot s{0, 1};
        int d = 1;
        do {
            p.dir[s.b][s.pos] = d;
            Step st = step(p, s, d, nullptr);
            s = st.s;
            d = st.d;
        } while (!(s == Slot{0, 1} && d == 1));
    }
    return p;
}

MiddleData middle_of(const FrontDiagram& d, int e) {
    auto dv = d.divides();
    if (std::find(dv.begin(), dv.end(), e) == dv.end()) throw DiagramError("NoDividingLine", "event is not a dividing line");
    Piece l = window(d, -1, e), r = window(d, e, -1);
    MiddleData m;
    m.n = d.whole.width[e];
    m.betaR = l.pairR;
    m.betaL = r.pairL;
    m.mu = d.whole.mu[e];
    return m;
}

Split split(const FrontDiagram& d) {
    auto dv = d.divides();
    if (dv.empty()) throw DiagramError("NoDividingLine", "diagram has no dividing line");
    if (dv.size() > 1) throw DiagramError("TwoDividingLines", "use an LR split");
    Split s;
    s.left = window(d, -1, dv[0]);
    s.right = window(d, dv[0], -1);
    s.mid = middle_of(d, dv[0]);
    return s;
}

KnotTrace trace_knot(const Piece& p) {
    KnotTrace out;
    Slot start;
    int d;
    bool lineStart = false;
    if (p.mark) {
        start = *p.mark;
        d = p.dir[start.b][start.pos];
        if (d == 0) d = 1;
        lineStart = (start.b == 0 && p.leftLine) || (start.b == p.E() && p.rightLine);
    } else if (p.leftLine || p.rightLine) {
        start = Slot{p.anchorSide == 1 ? 0 : p.E(), p.anchorPoint};
        d = p.anchorSide == 1 ? 1 : -1;
        lineStart = true;
    } else {
        start = Slot{1, 1};
        d = p.dir.empty() || p.dir[1][1] == 0 ? 1 : p.dir[1][1];
    }
    if (lineStart) {
        int side = (start.b == 0 && p.leftLine) ? 1 : 2;
        out.push_back(Site{Site::Point, -1, 0, 0, side, start.pos, 0});
    }
    Slot s = start;
    int total = totalSlots(p), guard = 0;
    while (true) {
        std::vector<Site> buf;
        Step st = step(p, s, d, &buf);
        if (st.s == start) {
            if (!buf.empty() && buf.back().kind == Site::Point) buf.pop_back();
            if (!p.mark && !buf.empty() && buf.back().kind == Site::Jump) buf.pop_back();
            out.insert(out.end(), buf.begin(), buf.end());
            break;
        }
        out.insert(out.end(), buf.begin(), buf.end());
        s = st.s;
        d = st.d;
        if (++guard > 4 * total + 8) throw DiagramError("MultiComponent", "trace does not close");
    }
    return out;
}

std::string trace_str(const KnotTrace& t) {
    std::string s;
    for (auto& x : t) {
        if (!s.empty()) s += " ";
        switch (x.kind) {
        case Site::Chord:
            s += "R" + std::to_string(x.chord) + (x.sign > 0 ? "+" : "-") + "@" + std::to_string(x.heading);
            break;
        case Site::Point:
            s += std::string(x.side == 1 ? "L" : "R") + "pt" + std::to_string(x.i);
            break;
        case Site::Jump:
            s += std::string(x.side == 1 ? "JL" : "JR") + std::to_string(x.i) + ">" + std::to_string(x.j);
            break;
        }
    }
    return s;
}

std::string front_text(const std::vector<Event>& events, const std::optional<Slot>& mark, bool labels) {
    std::ostringstream os;
    os << "front v1\n";
    for (size_t k = 0; k <= events.size(); ++k) {
        if (mark && mark->b == static_cast<int>(k)) os << "mark " << mark->pos << "\n";
        if (k == events.size()) break;
        const Event& e = events[k];
        switch (e.kind) {
        case EventKind::LeftCusp: os << "lcusp " << e.row << "\n"; break;
        case EventKind::RightCusp: os << "rcusp " << e.row << "\n"; break;
        case EventKind::Crossing:
            os << "cross " << e.row;
            if (labels) os << " " << e.label;
            os << "\n";
            break;
        case EventKind::Divide: os << "divide\n"; break;
        case EventKind::Mark: os << "mark " << e.row << "\n"; break;
        }
    }
    return os.str();
}

}  // namespace lsft

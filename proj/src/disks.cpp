#include "lsft/disks.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace lsft {

Caps Caps::fromEnv() { return fromEnv(Caps{}); }

Caps Caps::fromEnv(Caps base) {
    // LSFT_BUDGET="intervals,corners[,disks]"
    const char* v = std::getenv("LSFT_BUDGET");
    if (!v) return base;
    std::istringstream is(v);
    std::string part;
    std::vector<long> vals;
    while (std::getline(is, part, ',')) {
        try {
            vals.push_back(std::stol(part));
        } catch (...) {
            return base;
        }
    }
    if (vals.size() > 0 && vals[0] > 0) base.maxIntervals = static_cast<int>(vals[0]);
    if (vals.size() > 1 && vals[1] > 0) base.maxCorners = static_cast<int>(vals[1]);
    if (vals.size() > 2 && vals[2] > 0) base.maxDisks = vals[2];
    return base;
}

int DiskBoundary::positiveCount() const {
    int n = 0;
    for (auto& c : corners) n += c.positive();
    return n;
}

bool DiskBoundary::operator<(const DiskBoundary& o) const {
    if (corners != o.corners) return corners < o.corners;
    if (segments != o.segments) return segments < o.segments;
    return t < o.t;
}

bool DiskBoundary::operator==(const DiskBoundary& o) const {
    return corners == o.corners && segments == o.segments && t == o.t;
}

std::string DiskBoundary::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& c : corners) {
        os << (first ? "" : " ") << (c.positive() ? "p" : "q") << c.chord << c.quad;
        first = false;
    }
    for (auto& s : segments) {
        os << (first ? "" : " ") << (s.side == 1 ? "L" : s.side == 2 ? "R" : "M") << "(" << s.i << "," << s.j << ")"
           << (s.distinguished ? "*" : "");
        first = false;
    }
    if (t) os << " t^" << t;
    os << "}";
    return os.str();
}

namespace {

struct Sheet {
    int a, c;
    std::vector<Corner> top, bot;
    bool hasSeg = false;
    Segment seg;
};

struct State {
    std::vector<Sheet> sheets;
    bool started = false;
    bool divideDone = false;
    std::vector<Corner> corners;
    std::vector<Segment> segs;
    int t = 0;
    int ends = 0;
    std::vector<WordItem> word;
};

struct Opt {
    std::vector<Sheet> out;
    bool ended = false;
    bool hasCorner = false;
    Corner corner;
    bool hasSeg = false;
    Segment seg;
};

std::vector<WordItem> stripWord(const Sheet& s) {
    std::vector<WordItem> w;
    for (auto it = s.top.rbegin(); it != s.top.rend(); ++it) w.push_back(WordItem{false, *it, {}});
    if (s.hasSeg) w.push_back(WordItem{true, {}, s.seg});
    for (auto& c : s.bot) w.push_back(WordItem{false, c, {}});
    return w;
}

class Sweeper {
public:
    Sweeper(const DiskScope& sc, const Caps& caps) : sc_(sc), p_(*sc.piece), caps_(caps) {}

    std::vector<DiskBoundary> run() {
        State s;
        atBoundary(0, s);
        std::sort(out_.begin(), out_.end());
        return out_;
    }

private:
    const DiskScope& sc_;
    const Piece& p_;
    Caps caps_;
    std::vector<DiskBoundary> out_;

    bool startMode() const { return sc_.divide >= 0 && sc_.mode == DivideMode::Start; }

    void record(const State& s) {
        if (sc_.divide >= 0 && sc_.mode == DivideMode::End && !s.divideDone) return;
        DiskBoundary d;
        d.corners = s.corners;
        d.segments = s.segs;
        std::sort(d.corners.begin(), d.corners.end());
        std::sort(d.segments.begin(), d.segments.end());
        d.t = s.t;
        d.sheets = s.ends;
        if (s.ends == 1) d.word = s.word;
        out_.push_back(std::move(d));
        if (static_cast<long>(out_.size()) > caps_.maxDisks) throw BudgetError("SearchBudgetExceeded: disk count");
    }

    void checkCaps(const State& s) const {
        if (static_cast<int>(s.sheets.size()) > caps_.maxIntervals)
            throw BudgetError("SearchBudgetExceeded: more than " + std::to_string(caps_.maxIntervals) + " intervals");
        if (static_cast<int>(s.corners.size()) > caps_.maxCorners)
            throw BudgetError("SearchBudgetExceeded: more than " + std::to_string(caps_.maxCorners) + " corners");
    }

    void atBoundary(int b, State s) {
        if (b == 0 && p_.leftLine && sc_.leftStarts && !startMode() && !s.started) {
            int n = p_.nLeft();
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    State t = s;
                    Sheet sh{i, j, {}, {}, true, Segment{1, i, j, false}};
                    t.sheets.push_back(sh);
                    t.segs.push_back(sh.seg);
                    t.started = true;
                    atBoundaryMarked(b, t);
                }
        }
        atBoundaryMarked(b, std::move(s));
    }

    void atBoundaryMarked(int b, State s) {
        if (p_.mark && p_.mark->b == b) {
            int d = p_.dir[b][p_.mark->pos];
            for (auto& sh : s.sheets) {
                if (sh.a == p_.mark->pos) s.t += d;
                if (sh.c == p_.mark->pos) s.t -= d;
            }
        }
        if (b == p_.E()) {
            if (s.sheets.empty()) return;
            if (!(p_.rightLine && sc_.rightEnds)) return;
            for (auto& sh : s.sheets) {
                Segment g{2, sh.a, sh.c, false};
                s.segs.push_back(g);
                s.ends++;
                s.word = stripWord(sh);
            }
            s.sheets.clear();
            record(s);
            return;
        }
        event(b, std::move(s));
    }

    std::vector<Opt> options(const Event& e, int b, const Sheet& sh) const {
        std::vector<Opt> r;
        auto keep = [&](int a, int c) {
            Opt o;
            Sheet n = sh;
            n.a = a;
            n.c = c;
            o.out.push_back(n);
            return o;
        };
        int a = sh.a, c = sh.c, u = e.row;
        switch (e.kind) {
        case EventKind::Crossing: {
            int lab = e.label;
            if (a == u && c == u + 1) {
                Opt o;
                o.ended = true;
                o.hasCorner = true;
                o.corner = Corner{lab, 'L'};
                r.push_back(o);
            } else if (a == u) {
                r.push_back(keep(u + 1, c));
            } else if (a == u + 1) {
                r.push_back(keep(u, c));
                Opt o = keep(u + 1, c);
                o.hasCorner = true;
                o.corner = Corner{lab, 'B'};
                o.out[0].top.push_back(o.corner);
                r.push_back(o);
            } else if (c == u + 1) {
                r.push_back(keep(a, u));
            } else if (c == u) {
                r.push_back(keep(a, u + 1));
                Opt o = keep(a, u);
                o.hasCorner = true;
                o.corner = Corner{lab, 'T'};
                o.out[0].bot.push_back(o.corner);
                r.push_back(o);
            } else {
                r.push_back(keep(a, c));
            }
            break;
        }
        case EventKind::LeftCusp:
            if (c < u) {
                r.push_back(keep(a, c));
            } else if (a >= u) {
                r.push_back(keep(a + 2, c + 2));
            } else {
                r.push_back(keep(a, c + 2));
                Opt o;
                Sheet top = sh, bot = sh;
                top.c = u;
                bot.a = u + 1;
                bot.c = c + 2;
                o.out = {top, bot};
                r.push_back(o);
            }
            break;
        case EventKind::RightCusp:
            if (a == u && c == u + 1) {
                Opt o;
                o.ended = true;
                o.hasCorner = true;
                o.corner = Corner{e.label, 'L'};
                r.push_back(o);
            } else if (c < u) {
                r.push_back(keep(a, c));
            } else if (a > u + 1) {
                r.push_back(keep(a - 2, c - 2));
            } else if (a < u && c > u + 1) {
                r.push_back(keep(a, c - 2));
            }
            break;
        case EventKind::Divide:
            r.push_back(keep(a, c));
            if (b == sc_.divide && sc_.mode == DivideMode::End && a == sc_.di && c == sc_.dj) {
                Opt o;
                o.ended = true;
                o.hasSeg = true;
                o.seg = Segment{3, a, c, true};
                r.push_back(o);
            }
            break;
        default:
            r.push_back(keep(a, c));
        }
        return r;
    }

    void combine(int b, const std::vector<std::vector<Opt>>& opts, size_t k, State& acc, int divideEnds, State& base) {
        if (k == opts.size()) {
            if (b == sc_.divide && sc_.mode == DivideMode::End && divideEnds != 1) return;
            State n = acc;
            if (b == sc_.divide && sc_.mode == DivideMode::End) n.divideDone = true;
            afterEvent(b, n);
            return;
        }
        for (auto& o : opts[k]) {
            int de = divideEnds + (o.hasSeg ? 1 : 0);
            if (de > 1) continue;
            State save = acc;
            for (auto& sh : o.out) acc.sheets.push_back(sh);
            if (o.hasCorner) acc.corners.push_back(o.corner);
            if (o.hasSeg) acc.segs.push_back(o.seg);
            if (o.ended) {
                acc.ends++;
                Sheet fin = base.sheets[k];
                if (o.hasCorner && !o.corner.positive()) fin.top.push_back(o.corner);
                acc.word = stripWord(fin);
            }
            combine(b, opts, k + 1, acc, de, base);
            acc = std::move(save);
        }
    }

    void event(int b, State s) {
        const Event& e = p_.events[b];
        std::vector<std::vector<Opt>> opts;
        for (auto& sh : s.sheets) {
            opts.push_back(options(e, b, sh));
            if (opts.back().empty()) return;
        }
        State acc = s;
        acc.sheets.clear();
        combine(b, opts, 0, acc, 0, s);
    }

    void afterEvent(int b, State s) {
        const Event& e = p_.events[b];
        checkCaps(s);
        if (s.started && s.sheets.empty()) {
            record(s);
            return;
        }
        if (!s.started) {
            bool allowStart = !startMode() || b == sc_.divide;
            if (allowStart) {
                if (startMode()) {
                    State t = s;
                    Sheet sh{sc_.di, sc_.dj, {}, {}, true, Segment{3, sc_.di, sc_.dj, true}};
                    t.sheets.push_back(sh);
                    t.segs.push_back(sh.seg);
                    t.started = true;
                    atBoundary(b + 1, t);
                    return;
                }
                if (e.kind == EventKind::Crossing) {
                    State t = s;
                    Corner c{e.label, 'R'};
                    t.sheets.push_back(Sheet{e.row, e.row + 1, {}, {}, false, {}});
                    t.corners.push_back(c);
                    t.started = true;
                    atBoundary(b + 1, t);
                } else if (e.kind == EventKind::LeftCusp) {
                    State t = s;
                    t.sheets.push_back(Sheet{e.row, e.row + 1, {}, {}, false, {}});
                    t.started = true;
                    atBoundary(b + 1, t);
                }
            }
            if (startMode() && b >= sc_.divide) return;
            atBoundary(b + 1, std::move(s));
            return;
        }
        atBoundary(b + 1, std::move(s));
    }
};

}  // namespace

std::vector<DiskBoundary> sweep_disks(const DiskScope& scope, const Caps& caps) {
    if (!scope.piece) throw MathError("no piece");
    Sweeper sw(scope, caps);
    return sw.run();
}

Monomial disk_monomial(const DiskBoundary& d, const SegmentTag& tag, bool skipDistinguished) {
    Monomial m = Monomial::tpow(d.t);
    for (auto& c : d.corners) m = m * Monomial::of(c.positive() ? Gen::p(c.chord) : Gen::q(c.chord));
    for (auto& s : d.segments) {
        if (skipDistinguished && s.distinguished) continue;
        m = m * Monomial::of(tag(s));
    }
    return m;
}

Monomial disk_word(const DiskBoundary& d, const SegmentTag& tag) {
    Monomial m = Monomial::one(Discipline::FreeWord);
    for (auto& w : d.word) m = m * Monomial::of(w.isSegment ? tag(w.s) : Gen::q(w.c.chord), Discipline::FreeWord);
    return m;
}

std::vector<DiskBoundary> hamiltonian_disks(const Piece& p, const Caps& caps) {
    DiskScope sc;
    sc.piece = &p;
    return sweep_disks(sc, caps);
}

Poly ce_disks(const Piece& closed, int v, const Caps& caps) {
    Poly r(Discipline::FreeWord);
    auto rc = closed.rightCuspLabels();
    if (std::find(rc.begin(), rc.end(), v) != rc.end()) r.toggle(Monomial::one(Discipline::FreeWord));
    for (auto& d : hamiltonian_disks(closed, caps)) {
        if (d.positiveCount() != 1 || !d.segments.empty()) continue;
        bool hit = false;
        for (auto& c : d.corners) hit = hit || (c.positive() && c.chord == v);
        if (!hit) continue;
        r.toggle(disk_word(d, [](const Segment& s) { return Gen::alpha(s.i, s.j); }));
    }
    return r;
}

std::vector<DiskBoundary> half_disks(const Piece& half, int i, int j, Profile profile, const Caps& caps) {
    std::vector<DiskBoundary> out;
    int side = half.rightLine && !half.leftLine ? 2 : 1;
    for (auto& d : hamiltonian_disks(half, caps)) {
        int pc = d.positiveCount();
        if (profile == Profile::NoPositive && (pc != 0 || d.segments.size() != 1)) continue;
        if (profile == Profile::OnePositive && pc != 1) continue;
        for (size_t k = 0; k < d.segments.size(); ++k) {
            auto& s = d.segments[k];
            if (s.side != side || s.i != i || s.j != j) continue;
            if (k > 0 && d.segments[k - 1] == s) continue;
            // one copy per equal segment instance
            size_t same = 0;
            for (auto& x : d.segments) same += (x == s);
            for (size_t c = 0; c < same; ++c) {
                DiskBoundary e = d;
                for (auto& x : e.segments)
                    if (x == s) {
                        x.distinguished = true;
                        break;
                    }
                std::sort(e.segments.begin(), e.segments.end());
                out.push_back(e);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DiskBoundary> lr_morphism_disks(const Piece& p, int divide, int side, int i, int j, const Caps& caps) {
    DiskScope sc;
    sc.piece = &p;
    sc.divide = divide;
    sc.mode = side == 1 ? DivideMode::End : DivideMode::Start;
    sc.di = i;
    sc.dj = j;
    return sweep_disks(sc, caps);
}

std::string disks_json(const std::vector<DiskBoundary>& ds) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& d : ds) {
        nlohmann::json j;
        nlohmann::json cs = nlohmann::json::array();
        for (auto& c : d.corners) cs.push_back({{"chord", c.chord}, {"quadrant", std::string(1, c.quad)}, {"sign", c.positive() ? "+" : "-"}});
        nlohmann::json ss = nlohmann::json::array();
        for (auto& s : d.segments) ss.push_back({{"side", s.side}, {"i", s.i}, {"j", s.j}, {"distinguished", s.distinguished}});
        j["corners"] = cs;
        j["segments"] = ss;
        j["t"] = d.t;
        j["ends"] = d.sheets;
        arr.push_back(j);
    }
    return arr.dump();
}

}  // namespace lsft

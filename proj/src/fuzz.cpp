#include "lsft/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace lsft {

namespace {

bool sameDisks(const DiskScope& sc, const Caps& caps, std::string& why, const std::string& name) {
    auto a = sweep_disks(sc, caps);
    auto b = oracle_disks(sc);
    if (a == b) return true;
    why += name + " (sweep " + std::to_string(a.size()) + ", oracle " + std::to_string(b.size()) + "); ";
    return false;
}

std::vector<std::string> eventLines(const std::string& front) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : front) {
        if (c == '\n' || c == ';') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    std::vector<std::string> kept;
    for (auto& l : out) {
        auto a = l.find_first_not_of(" \t"), b = l.find_last_not_of(" \t");
        if (a != std::string::npos) kept.push_back(l.substr(a, b - a + 1));
    }
    return kept;
}

std::string joinLines(const std::vector<std::string>& ls) {
    std::string s;
    for (auto& l : ls) s += l + "\n";
    return s;
}

}  // namespace

Check oracle_equivalence(const FrontDiagram& d, const Caps& caps) {
    Check c{"sweep = oracle"};
    DiskScope whole;
    whole.piece = &d.whole;
    bool ok = sameDisks(whole, caps, c.detail, "whole");
    auto dv = d.divides();
    if (!dv.empty()) {
        Split s = split(d);
        DiskScope l, r;
        l.piece = &s.left;
        r.piece = &s.right;
        ok = sameDisks(l, caps, c.detail, "left") && ok;
        ok = sameDisks(r, caps, c.detail, "right") && ok;
        int e = dv[0], n = d.whole.width[e];
        for (int side = 1; side <= 2; ++side)
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    DiskScope m;
                    m.piece = &d.whole;
                    m.divide = e;
                    m.mode = side == 1 ? DivideMode::End : DivideMode::Start;
                    m.di = i;
                    m.dj = j;
                    std::string nm = (side == 1 ? "D^L " : "D^R ") + std::to_string(i) + "," + std::to_string(j);
                    ok = sameDisks(m, caps, c.detail, nm) && ok;
                }
    }
    c.ok = ok;
    return c;
}

Report verify_all(const FrontDiagram& d, const Caps& caps) {
    Report rep;
    rep.subject = front_text(d.events, d.mark);
    Dga ce = build_ce(d, caps);
    rep.add(verify_d_squared(ce));
    rep.add(verify_degrees(ce));
    Dga a = build_lsft(d, caps);
    rep.add(verify_d_squared(a));
    rep.add(verify_degrees(a));
    rep.add(verify_qme(a));
    rep.add(verify_ce_consistency(a, ce));
    if (d.divides().size() == 1) {
        rep.merge(verify_sivek_pushout(sivek_maps(d, caps)), "sivek: ");
        rep.merge(verify_bordered_suite(build_bordered(d, caps)), "bordered: ");
    }
    return rep;
}

std::string random_front(std::mt19937_64& rng, int maxCrossings, int maxStrands) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (;;) {
        std::vector<std::string> ev = {"lcusp 1"};
        int w = 2, crossings = 0;
        int steps = pick(1, maxCrossings + maxStrands / 2 + 1);
        for (int k = 0; k < steps; ++k) {
            bool canCusp = w + 2 <= maxStrands, canCross = crossings < maxCrossings;
            if (!canCusp && !canCross) break;
            if (canCusp && (!canCross || pick(0, 3) == 0)) {
                ev.push_back("lcusp " + std::to_string(pick(1, w + 1)));
                w += 2;
            } else {
                ev.push_back("cross " + std::to_string(pick(1, w - 1)));
                ++crossings;
            }
        }
        ev.insert(ev.begin() + pick(1, static_cast<int>(ev.size())), "divide");
        for (int k = 0; k < w / 2; ++k) ev.push_back("rcusp 1");
        std::string text = "front v1\n" + joinLines(ev);
        try {
            parse_front(text);
            return text;
        } catch (const DiagramError&) {
        }
    }
}

std::vector<std::string> random_corpus(const FuzzConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::string> out;
    for (int k = 0; k < cfg.count; ++k) out.push_back(random_front(rng, cfg.maxCrossings, cfg.maxStrands));
    return out;
}

std::vector<FuzzCase> run_corpus(const std::vector<std::string>& corpus, int threads,
                                 const std::function<Report(const FrontDiagram&)>& fn) {
    std::vector<FuzzCase> out(corpus.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t k = next++; k < corpus.size(); k = next++) {
            out[k].front = corpus[k];
            try {
                out[k].report = fn(parse_front(corpus[k]));
            } catch (const std::exception& e) {
                out[k].error = e.what();
            }
        }
    };
    if (threads <= 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<int>(threads, std::max<size_t>(1, corpus.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return out;
}

std::string shrink_front(const std::string& front, const std::function<bool(const std::string&)>& fails) {
    std::vector<std::string> ls = eventLines(front);
    bool progress = true;
    while (progress) {
        progress = false;
        // a left cusp goes together with one closing right cusp
        for (size_t k = 1; k < ls.size() && !progress; ++k)
            for (int withLast = 0; withLast < 2 && !progress; ++withLast) {
                std::vector<std::string> t = ls;
                if (withLast) {
                    if (k + 1 >= t.size()) continue;
                    t.pop_back();
                }
                t.erase(t.begin() + k);
                std::string text = joinLines(t);
                try {
                    parse_front(text);
                } catch (const DiagramError&) {
                    continue;
                }
                if (fails(text)) {
                    ls = t;
                    progress = true;
                }
            }
    }
    return joinLines(ls);
}

}  // namespace lsft

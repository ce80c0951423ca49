#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "lsft/examples.hpp"
#include "lsft/fuzz.hpp"
#include "lsft/report.hpp"

using namespace lsft;

namespace {

enum Exit { Ok = 0, IdentityFailure = 1, Invalid = 2, Budget = 3 };

struct RunConfig {
    std::vector<std::string> input;
    std::string format = "text";
    std::string part = "all";
    std::string orientation = "auto";
    bool dumpDisks = false, dumpStrings = false, oracle = false;
    int maxIntervals = Caps{}.maxIntervals;
    int maxCorners = Caps{}.maxCorners;
    std::uint64_t seed = 42;
    int count = 100, maxCrossings = 6, threads = 0;
    std::string out = "fuzz-failures";

    Caps caps() const {
        Caps c;
        c.maxIntervals = maxIntervals;
        c.maxCorners = maxCorners;
        return Caps::fromEnv(c);
    }
    bool json() const { return format == "json"; }
};

std::string readInput(const std::vector<std::string>& in) {
    if (in.empty()) throw DiagramError("MalformedInput", "no input given");
    if (in[0] == "example") {
        if (in.size() != 2) throw DiagramError("MalformedInput", "usage: example <name>");
        return example_source(in[1]);
    }
    if (in.size() != 1) throw DiagramError("MalformedInput", "expected one input file");
    if (in[0] == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream f(in[0]);
    if (!f) throw DiagramError("MalformedInput", "cannot read " + in[0]);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string inputName(const std::vector<std::string>& in) {
    std::string s;
    for (auto& x : in) s += (s.empty() ? "" : " ") + x;
    return s;
}

// Collected output of one command, printed as text sections or one JSON object.
struct Output {
    std::string command, input;
    std::vector<Dga> algebras;
    std::vector<DgaMorphism> morphisms;
    std::optional<Poly> h;
    std::optional<Report> report;
    json extra = json::object();
    std::vector<std::string> textExtra;

    void print(const RunConfig& cfg) const {
        if (cfg.json()) {
            json j = extra;
            j["command"] = command;
            j["input"] = input;
            if (!algebras.empty()) {
                j["algebras"] = json::array();
                for (auto& a : algebras) j["algebras"].push_back(dga_to_json(a));
            }
            if (!morphisms.empty()) {
                j["morphisms"] = json::array();
                for (auto& m : morphisms) j["morphisms"].push_back(morphism_to_json(m));
            }
            if (h) j["h"] = poly_to_json(*h);
            if (report) j["report"] = report_to_json(*report);
            std::cout << j.dump(2) << "\n";
            return;
        }
        std::string sep;
        for (auto& a : algebras) {
            std::cout << sep << dga_text(a);
            sep = "\n";
        }
        for (auto& m : morphisms) {
            std::cout << sep << morphism_text(m);
            sep = "\n";
        }
        for (auto& t : textExtra) {
            std::cout << sep << t;
            sep = "\n";
        }
        if (report) std::cout << sep << report_text(*report);
    }
};

FrontDiagram loadFront(const RunConfig& cfg, const std::string& text) {
    if (cfg.orientation != "auto" && cfg.orientation != "flip")
        throw DiagramError("MalformedInput", "orientation must be auto or flip");
    return parse_front(text, cfg.orientation == "flip");
}

std::string disksText(const std::string& title, const std::vector<DiskBoundary>& ds) {
    std::string s = "[disks: " + title + "]\n";
    for (auto& d : ds) s += d.str() + "\n";
    return s;
}

void addDumps(Output& o, const RunConfig& cfg, const std::vector<std::pair<std::string, const Piece*>>& pieces) {
    for (auto& [name, p] : pieces) {
        if (cfg.dumpDisks) {
            auto ds = hamiltonian_disks(*p, cfg.caps());
            o.textExtra.push_back(disksText(name, ds));
            o.extra["disks"][name] = json::parse(disks_json(ds));
        }
        if (cfg.dumpStrings) {
            std::string s = dump_strings(*p);
            o.textExtra.push_back("[strings: " + name + "]\n" + s);
            o.extra["strings"][name] = s;
        }
    }
}

int cmdCe(const RunConfig& cfg) {
    FrontDiagram d = loadFront(cfg, readInput(cfg.input));
    Output o{"ce", inputName(cfg.input)};
    o.algebras.push_back(build_ce(d, cfg.caps()));
    addDumps(o, cfg, {{"whole", &d.whole}});
    o.print(cfg);
    return Ok;
}

int cmdSivek(const RunConfig& cfg) {
    FrontDiagram d = loadFront(cfg, readInput(cfg.input));
    SivekSplit s = sivek_maps(d, cfg.caps());
    Output o{"sivek", inputName(cfg.input)};
    o.algebras = {s.A, s.AL, s.AM, s.AR};
    o.morphisms = {s.ell, s.r, s.L, s.R};
    o.print(cfg);
    return Ok;
}

int cmdLsft(const RunConfig& cfg) {
    FrontDiagram d = loadFront(cfg, readInput(cfg.input));
    Output o{"lsft", inputName(cfg.input)};
    Dga a = build_lsft(d, cfg.caps());
    o.h = a.hamiltonian;
    o.algebras.push_back(a);
    addDumps(o, cfg, {{"whole", &d.whole}});
    o.print(cfg);
    return Ok;
}

int cmdBlsft(const RunConfig& cfg) {
    std::string text = readInput(cfg.input);
    Output o{"blsft", inputName(cfg.input)};
    o.extra["part"] = cfg.part;
    if (is_middle_text(text)) {
        if (cfg.part != "middle") throw DiagramError("MalformedInput", "middle data only supports --part middle");
        MiddleData m = parse_middle(text);
        gamma_paths(m);
        Dga a = build_middle_sft(m);
        o.h = a.hamiltonian;
        o.algebras.push_back(a);
        o.print(cfg);
        return Ok;
    }
    FrontDiagram d = loadFront(cfg, text);
    if (cfg.part == "lr") {
        auto dv = d.divides();
        if (dv.size() < 2) throw DiagramError("NoDividingLine", "--part lr needs two dividing lines");
        LrSquare s = build_lr_square(d, {-1, dv[0], dv[1], -1}, cfg.caps());
        o.algebras = {s.A2, s.A12, s.A23, s.A123};
        o.morphisms = {s.f, s.g, s.F, s.G};
        o.h = s.A123.hamiltonian;
        o.print(cfg);
        return Ok;
    }
    BorderedSplit s = build_bordered(d, cfg.caps());
    o.h = s.A.hamiltonian;
    if (cfg.part == "all") {
        o.algebras = {s.A, s.M, s.AL, s.AR};
        o.morphisms = {s.ell, s.r, s.L, s.R};
    } else if (cfg.part == "middle") {
        o.algebras = {s.M};
        o.h = s.M.hamiltonian;
    } else if (cfg.part == "left") {
        o.algebras = {s.AL};
        o.morphisms = {s.ell, s.L};
        o.h = s.AL.hamiltonian;
    } else if (cfg.part == "right") {
        o.algebras = {s.AR};
        o.morphisms = {s.r, s.R};
        o.h = s.AR.hamiltonian;
    } else {
        throw DiagramError("MalformedInput", "unknown part " + cfg.part);
    }
    Split sp = split(d);
    addDumps(o, cfg, {{"whole", &d.whole}, {"left", &sp.left}, {"right", &sp.right}});
    o.print(cfg);
    return Ok;
}

Report verifyMiddle(const MiddleData& m) {
    gamma_paths(m);
    Dga a = build_middle_sft(m);
    Report r;
    r.subject = "middle data n=" + std::to_string(m.n);
    r.add(verify_d_squared(a));
    r.add(verify_degrees(a));
    r.add(verify_qme(a));
    r.add(verify_sft_form(a));
    r.add(verify_h2(a, middle_h2(m)));
    r.add(verify_delta_bracket(a));
    r.add(verify_jacobi(a));
    return r;
}

// Re-checks the tables of a saved JSON report (output of --format json).
Report verifySaved(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DiagramError("MalformedInput", e.what());
    }
    Report r;
    r.subject = "saved report " + j.value("input", std::string("?"));
    std::map<std::string, Dga> byName;
    try {
        for (auto& aj : j.value("algebras", json::array())) {
            Dga a = dga_from_json(aj);
            r.add(verify_d_squared(a));
            r.add(verify_degrees(a));
            if (a.delta && a.hamiltonian) {
                r.add(verify_qme(a));
                r.add(verify_sft_form(a));
            }
            if (a.bracket) r.add(verify_jacobi(a));
            byName[a.name] = a;
        }
        for (auto& mj : j.value("morphisms", json::array())) {
            DgaMorphism m = morphism_from_json(mj);
            auto s = byName.find(m.source), t = byName.find(m.target);
            if (s != byName.end() && t != byName.end())
                r.add(verify_chain_map(m, s->second, t->second));
            else
                r.notes.push_back("chain map " + m.name + " skipped: algebras not in the file");
        }
    } catch (const json::exception& e) {
        throw DiagramError("MalformedInput", e.what());
    }
    if (r.checks.empty()) throw DiagramError("MalformedInput", "no algebras in the file");
    return r;
}

int cmdVerify(const RunConfig& cfg) {
    std::string text = readInput(cfg.input);
    Report r;
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        r = verifySaved(text);
    } else if (is_middle_text(text)) {
        r = verifyMiddle(parse_middle(text));
    } else {
        FrontDiagram d = loadFront(cfg, text);
        r = verify_all(d, cfg.caps());
        if (cfg.oracle) r.add(oracle_equivalence(d, cfg.caps()));
    }
    Output o{"verify", inputName(cfg.input)};
    o.report = r;
    o.print(cfg);
    return r.ok() ? Ok : IdentityFailure;
}

int cmdFuzz(const RunConfig& cfg) {
    FuzzConfig fc;
    fc.seed = cfg.seed;
    fc.count = cfg.count;
    fc.maxCrossings = cfg.maxCrossings;
    fc.threads = cfg.threads;
    fc.caps = cfg.caps();
    auto corpus = random_corpus(fc);
    Caps caps = fc.caps;
    bool withOracle = cfg.oracle;
    auto check = [caps, withOracle](const FrontDiagram& d) {
        Report r = verify_all(d, caps);
        if (withOracle) r.add(oracle_equivalence(d, caps));
        return r;
    };
    auto results = run_corpus(corpus, fc.threads, check);
    int failed = 0, firstBad = -1;
    json cases = json::array();
    for (size_t k = 0; k < results.size(); ++k) {
        const FuzzCase& c = results[k];
        if (!c.ok()) {
            ++failed;
            if (firstBad < 0) firstBad = static_cast<int>(k);
        }
        cases.push_back({{"index", k}, {"ok", c.ok()}, {"error", c.error}, {"checks", c.report.checks.size()}});
    }
    std::string shrunk;
    if (firstBad >= 0) {
        auto fails = [&](const std::string& f) {
            try {
                return !check(parse_front(f)).ok();
            } catch (const DiagramError&) {
                return false;
            } catch (const std::exception&) {
                return true;
            }
        };
        const std::string& orig = results[firstBad].front;
        shrunk = fails(orig) ? shrink_front(orig, fails) : orig;
        std::filesystem::create_directories(cfg.out);
        std::string stem = cfg.out + "/seed" + std::to_string(cfg.seed) + "-case" + std::to_string(firstBad);
        std::ofstream(stem + ".front") << orig;
        std::ofstream(stem + "-min.front") << shrunk;
    }
    if (cfg.json()) {
        json j = {{"command", "fuzz"}, {"seed", cfg.seed}, {"count", cfg.count}, {"max_crossings", cfg.maxCrossings},
                  {"failed", failed}, {"cases", cases}};
        if (firstBad >= 0) j["shrunk"] = shrunk;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "[fuzz: seed " << cfg.seed << ", " << cfg.count << " fronts, <= " << cfg.maxCrossings
                  << " crossings]\n";
        for (size_t k = 0; k < results.size(); ++k) {
            const FuzzCase& c = results[k];
            if (c.ok()) continue;
            std::cout << "FAIL  case " << k << "\n" << c.front;
            if (!c.error.empty()) std::cout << "  error: " << c.error << "\n";
            for (auto& ch : c.report.checks)
                if (!ch.ok) std::cout << "  " << ch.name << "  -- " << ch.detail << "\n";
        }
        if (firstBad >= 0) std::cout << "shrunk failure:\n" << shrunk;
        std::cout << "passed = " << (results.size() - failed) << "/" << results.size() << "\n";
        std::cout << "result = " << (failed ? "FAIL" : "pass") << "\n";
    }
    return failed ? IdentityFailure : Ok;
}

int cmdExample(const RunConfig& cfg) {
    if (cfg.input.empty()) {
        for (auto& n : example_names()) std::cout << n << "\n";
        return Ok;
    }
    std::cout << example_source(cfg.input[0]);
    return Ok;
}

void commonOptions(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-intervals", cfg.maxIntervals, "Sweep cap on slice intervals")->check(CLI::PositiveNumber);
    sub->add_option("--max-corners", cfg.maxCorners, "Sweep cap on disk corners")->check(CLI::PositiveNumber);
    sub->add_option("--orientation", cfg.orientation, "Knot orientation")->check(CLI::IsMember({"auto", "flip"}));
}

void inputOptions(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("input", cfg.input, "Diagram file, '-' for stdin, or 'example <name>'")->required();
    sub->add_flag("--dump-disks", cfg.dumpDisks, "Print the disks behind each Hamiltonian");
    sub->add_flag("--dump-strings", cfg.dumpStrings, "Print the broken closed strings");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Legendrian contact homology and bordered SFT algebras of simple fronts"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<int(const RunConfig&)> run;

    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(const RunConfig&);
    };
    const Cmd cmds[] = {
        {"ce", "Chekanov-Eliashberg DGA", cmdCe},
        {"sivek", "Bordered CE algebras and their gluing maps", cmdSivek},
        {"lsft", "Commutative SFT algebra of a closed front", cmdLsft},
        {"blsft", "Bordered SFT algebras and morphisms", cmdBlsft},
        {"verify", "Run every applicable identity", cmdVerify},
    };
    for (auto& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        commonOptions(sub, cfg);
        inputOptions(sub, cfg);
        auto fn = c.fn;
        sub->callback([&run, fn] { run = fn; });
        if (std::string(c.name) == "blsft")
            sub->add_option("--part", cfg.part, "Which algebras to print")
                ->check(CLI::IsMember({"all", "middle", "left", "right", "lr"}));
        if (std::string(c.name) == "verify") sub->add_flag("--oracle", cfg.oracle, "Also compare sweep and oracle disks");
    }
    CLI::App* fuzz = app.add_subcommand("fuzz", "Verify a seeded corpus of random fronts");
    commonOptions(fuzz, cfg);
    fuzz->add_option("--seed", cfg.seed, "Corpus seed");
    fuzz->add_option("--count", cfg.count, "Number of fronts")->check(CLI::PositiveNumber);
    fuzz->add_option("--max-crossings", cfg.maxCrossings, "Crossings per front")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores");
    fuzz->add_option("--out", cfg.out, "Directory for failing fixtures");
    fuzz->add_flag("--oracle", cfg.oracle, "Also compare sweep and oracle disks");
    fuzz->callback([&run] { run = cmdFuzz; });
    CLI::App* ex = app.add_subcommand("example", "List built-in diagrams or print one");
    ex->add_option("name", cfg.input, "Example name");
    ex->callback([&run] { run = cmdExample; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Invalid;
    }
    try {
        return run(cfg);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Budget;
    } catch (const DiagramError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    }
}

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lsft/bordered.hpp"

namespace lsft {

// Every identity that applies to a front with one dividing line (or a mark).
Report verify_all(const FrontDiagram& d, const Caps& caps = {});

// Sweep vs brute-force oracle on every scope the builders use.
Check oracle_equivalence(const FrontDiagram& d, const Caps& caps = {});

struct FuzzConfig {
    std::uint64_t seed = 42;
    int count = 100;
    int maxCrossings = 6;
    int maxStrands = 6;
    int threads = 0;  // 0: hardware concurrency
    Caps caps;
};

// Random simple front: left cusps and crossings in random order, a divide at
// a random column, closed by right cusps at one x-coordinate.  Rejection
// sampled until it is a single component.
std::string random_front(std::mt19937_64& rng, int maxCrossings, int maxStrands = 6);
std::vector<std::string> random_corpus(const FuzzConfig& cfg);

struct FuzzCase {
    std::string front;
    Report report;
    std::string error;  // budget or validation message, if any
    bool ok() const { return error.empty() && report.ok(); }
};

// Runs fn on each corpus entry across worker threads; results in input order.
std::vector<FuzzCase> run_corpus(const std::vector<std::string>& corpus, int threads,
                                 const std::function<Report(const FrontDiagram&)>& fn);

// Deletes events while the failure predicate still holds.
std::string shrink_front(const std::string& front, const std::function<bool(const std::string&)>& fails);

}  // namespace lsft

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "snlb/grid.hpp"

namespace snlb {

/// Deterministic uniform doubles from raw mt19937_64 words; identical
/// across standard libraries (no distribution objects involved).
struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    double uniform() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
    double symmetric() { return 2.0 * uniform() - 1.0; }
};

GridFunction make_mode(const GridSpec& spec, const std::array<long long, 3>& k, double phase = 0.0);
GridFunction make_random_band_limited(const GridSpec& spec, long long max_mode, std::uint64_t seed);
GridFunction make_smoothed_step(const GridSpec& spec, double delta = 0.1);
GridFunction make_ramp(const GridSpec& spec, int modes = 17);
GridFunction make_log_bump(const GridSpec& spec, double delta = 0.05);
GridFunction make_weierstrass(const GridSpec& spec, double a, long long b, int terms);

struct CorpusEntry {
    std::string name;
    GridFunction f;
};

/// Parses "mode:k", "random:kmax", "step", "ramp", "logbump",
/// "weier:K" (a = 1/2, b = 2), or "file:path" (raw format).
CorpusEntry make_corpus_entry(const std::string& name, const GridSpec& spec, std::uint64_t seed);

/// The default battery used by the verification suites.
std::vector<CorpusEntry> builtin_corpus(const GridSpec& spec, std::uint64_t seed);

}  // namespace snlb

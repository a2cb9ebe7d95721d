#pragma once

#include "dqr/core_model.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dqr {

/// Seeded random source. Bounded draws use rejection sampling on the raw
/// 64-bit engine output so a seed produces the same stream on every platform
/// (the std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    // True with probability num / den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    template <class T>
    const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

private:
    std::mt19937_64 engine_;
};

struct GenConfig {
    std::size_t objects = 8;
    std::size_t coverings = 1;
    std::size_t members = 3;
    // One gamma per covering, or a single value used for all of them.
    std::vector<Degree> gammas{Degree::parse("0.5")};
    // Degrees are drawn on the grid 10^-decimals; 0 gives crisp data.
    int decimals = 1;
    std::size_t targets = 1;
};

struct GeneratedSystem {
    UniversePtr universe;
    std::vector<FuzzyCovering> coverings;
    std::vector<NamedSet> targets;
};

/// Random system that satisfies the gamma-covering property by construction:
/// every object gets one member degree drawn from [gamma, 1], and members left
/// all-zero are given one positive degree. Throws ParameterError on a config
/// that cannot be met (no objects, no members, gamma off a crisp grid).
GeneratedSystem generate_system(const GenConfig& config, std::uint64_t seed);

/// Draws a config for the random test suites: 1..16 objects, 1..4 coverings,
/// 1..5 members, grids of 1 or 2 decimals, and now and then a crisp instance.
GenConfig random_config(Rng& rng);

/// Random fuzzy set on a 10^-decimals grid, biased towards 0 and 1.
FuzzySet random_fuzzy_set(Rng& rng, const UniversePtr& universe, int decimals);

} // namespace dqr

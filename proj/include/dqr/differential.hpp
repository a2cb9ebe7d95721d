#pragma once

#include "dqr/generator.hpp"
#include "dqr/neighborhood.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dqr {

/// Outcome of comparing the main path with the brute-force oracle.
struct DifferentialReport {
    std::size_t instances = 0;
    std::size_t evaluations = 0;
    // Exact-boundary parameter draws (P == alpha or beta, overlap == k).
    std::size_t boundary_hits = 0;
    std::vector<std::string> mismatches;
    // Shapes seen: object counts, covering counts, member counts.
    std::set<std::size_t> objects_seen, coverings_seen, members_seen;

    bool ok() const { return mismatches.empty(); }
    std::string summary() const;
};

/// Checks every operator, in both residual modes, plus both region families
/// and the threshold-form flags, for one system and target. Parameters are
/// drawn from rng and deliberately include values that sit exactly on an
/// object's P or overlap/residual sums.
void check_instance(Rng& rng, std::span<const FuzzyCovering> coverings, std::span<const NeighborhoodTable> tables,
                    const FuzzySet& X, const std::string& label, DifferentialReport& report);

/// `count` random instances from random_config, seeded deterministically.
DifferentialReport run_random_differential(std::uint64_t seed, std::size_t count);

/// `rounds` parameter draws against each target of a fixed, valid system.
DifferentialReport run_system_differential(const MultiGranulationSystem& system, std::span<const NamedSet> targets,
                                           std::uint64_t seed, std::size_t rounds);

} // namespace dqr

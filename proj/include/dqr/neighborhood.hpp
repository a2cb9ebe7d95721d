#pragma once

#include "dqr/core_model.hpp"

#include <vector>

namespace dqr {

/// Precomputed fuzzy gamma-neighborhoods of every object of one covering.
///
/// rows[x] is the pointwise min of the members whose degree at x reaches
/// gamma; sigma[x] is its sigma-count. Every operator reads neighborhoods
/// from a table and never recomputes them.
struct NeighborhoodTable {
    UniversePtr universe;
    std::string covering;
    Degree gamma;
    std::vector<FuzzySet> rows;
    std::vector<Decimal> sigma;
    // Indices of the covering members that qualified at each object.
    std::vector<std::vector<std::size_t>> qualifiers;

    std::size_t size() const { return rows.size(); }
};

/// Crisp neighborhood: intersection of every member containing x.
/// Throws ParameterError unless all members are 0/1 valued.
ObjectSet crisp_neighborhood(const ApproximationSpace& space, std::size_t x);

/// Fuzzy gamma-neighborhood of x.
FuzzySet fuzzy_gamma_neighborhood(const ApproximationSpace& space, std::size_t x);

/// Builds the table for a validated space. `threads` > 1 splits the objects
/// across worker threads; the result does not depend on it.
NeighborhoodTable build_table(const ApproximationSpace& space, unsigned threads = 1);

/// One table per covering of the system, each with the covering's own gamma.
std::vector<NeighborhoodTable> build_tables(const MultiGranulationSystem& system, unsigned threads = 1);

} // namespace dqr

#pragma once

#include "dqr/single_granulation.hpp"

#include <span>

namespace dqr {

// Multi-granulation operators fuse per-covering predicates object by object:
// TypeI requires every covering to accept (the "disjunctive" family), TypeII
// requires at least one (the "conjunctive" family). Each covering is read
// through its own table, so each uses its own gamma.
//
// All functions throw ParameterError when a parameter vector's length differs
// from the number of tables.

ApproximationResult mg_prob(std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                            std::span<const ThresholdPair> thresholds, Combinator combinator);

ApproximationResult mg_grade(std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                             std::span<const Grade> grades, Combinator combinator,
                             ResidualMode mode = ResidualMode::Residual);

// TypeI: AND over coverings of (prob AND grade); TypeII: OR over coverings of
// (prob OR grade).
ApproximationResult mg_dq(std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                          std::span<const ThresholdPair> thresholds, std::span<const Grade> grades,
                          Combinator combinator, ResidualMode mode = ResidualMode::Residual);

// Componentwise order on parameter vectors (both alpha and beta for pairs).
bool vector_leq(std::span<const ThresholdPair> a, std::span<const ThresholdPair> b);
bool vector_leq(std::span<const Grade> a, std::span<const Grade> b);

} // namespace dqr

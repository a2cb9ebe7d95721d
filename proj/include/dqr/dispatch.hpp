#pragma once

#include "dqr/multi_granulation.hpp"

#include <span>

namespace dqr {

/// Runs any operator by id on the main path. Single-covering operators take
/// exactly one table and length-one parameter vectors; multi-granulation
/// operators take one table and one parameter per covering.
ApproximationResult evaluate(OpId op, std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                             const OperatorParams& params);

} // namespace dqr

#pragma once

// Independent ground truth for differential testing.
//
// Nothing here may include or call the neighborhood, single_granulation or
// multi_granulation modules. Every function recomputes neighborhoods from the
// raw covering members and evaluates the defining predicate per object with
// its own integer arithmetic. It is deliberately slow.

#include "dqr/core_model.hpp"
#include "dqr/operator_id.hpp"
#include "dqr/sets.hpp"

#include <span>

namespace dqr::oracle {

// ---- crisp baseline operators (0/1 coverings, crisp targets) ----

// Intersection of all members containing x. Throws ParameterError when a
// member is not 0/1 valued.
ObjectSet crisp_neighborhood(const FuzzyCovering& covering, std::size_t x);

// lower = {x : N(x) subset of X}, upper = {x : N(x) meets X}.
ApproximationPair crisp_pawlak(const FuzzyCovering& covering, const ObjectSet& X);

struct CrispProbResult {
    ApproximationPair approx;
    ThreeRegions regions;
};

// Cardinality ratio |X & N(x)| / |N(x)| against alpha and beta.
CrispProbResult crisp_prob(const FuzzyCovering& covering, const ObjectSet& X, const ThresholdPair& t);

struct CrispGradeResult {
    ApproximationPair approx;
    FiveRegions regions;
};

// upper = {x : |X & N(x)| > k}, lower = {x : |X^c & N(x)| <= k}.
CrispGradeResult crisp_grade(const FuzzyCovering& covering, const ObjectSet& X, Grade k);

// ---- brute-force fuzzy operators ----

// Recomputes the named operator. Single-covering operators expect exactly
// one covering and parameter vectors of length one.
ApproximationResult brute_force(OpId op, std::span<const FuzzyCovering> coverings, const FuzzySet& X,
                                const OperatorParams& params);

ThreeRegions brute_prob_regions(const FuzzyCovering& covering, const FuzzySet& X, const ThresholdPair& t);
FiveRegions brute_grade_regions(const FuzzyCovering& covering, const FuzzySet& X, Grade k, ResidualMode mode);

// Objects whose overlap sum equals k exactly; these are the objects where a
// non-strict restatement of the strict grade-upper test changes the answer.
ObjectSet brute_overlap_equals(const FuzzyCovering& covering, const FuzzySet& X, Grade k);

} // namespace dqr::oracle

#pragma once

#include "dqr/neighborhood.hpp"
#include "dqr/operator_id.hpp"

#include <vector>

namespace dqr {

/// Sigma-count quantities of one object's neighborhood against a target X.
struct ObjectMeasures {
    Decimal sigma;           // sum_y N(y)
    Decimal overlap;         // sum_y min(X(y), N(y))
    Decimal residual;        // sum_y N(y) - min(X(y), N(y))
    Decimal complement_mass; // sum_y min(1 - X(y), N(y))

    Ratio probability() const { return Ratio{overlap, sigma}; }
    Decimal mass(ResidualMode mode) const { return mode == ResidualMode::Residual ? residual : complement_mass; }
};

// Per-object measures for X against every row of the table. Throws
// StructuralError when X lives over another universe.
std::vector<ObjectMeasures> measure(const NeighborhoodTable& table, const FuzzySet& X);

// The primitive predicates. Probabilistic tests are non-strict, the grade
// upper test is strict, the grade lower test is non-strict.
bool prob_at_least(const ObjectMeasures& m, Degree threshold);
bool grade_upper_holds(const ObjectMeasures& m, Grade k);
bool grade_lower_holds(const ObjectMeasures& m, Grade k, ResidualMode mode);

Ratio cond_prob(const NeighborhoodTable& table, const FuzzySet& X, std::size_t x);

ApproximationResult prob_approx(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t);
ThreeRegions prob_regions(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t);

ApproximationResult grade_approx(const NeighborhoodTable& table, const FuzzySet& X, Grade k,
                                 ResidualMode mode = ResidualMode::Residual);
FiveRegions grade_regions(const NeighborhoodTable& table, const FuzzySet& X, Grade k,
                          ResidualMode mode = ResidualMode::Residual);

/// Prob AND grade, per object.
ApproximationResult dq_disjunctive(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t, Grade k,
                                   ResidualMode mode = ResidualMode::Residual);
/// Prob OR grade, per object.
ApproximationResult dq_conjunctive(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t, Grade k,
                                   ResidualMode mode = ResidualMode::Residual);

/// Per-object comparison of the definitional grade predicates with their
/// ratio restatements.
///
/// upper: overlap > k  <=>  P > k / sigma   (strict, definitional)
///        P >= k / sigma                    (non-strict restatement)
/// lower: residual <= k  <=>  P >= 1 - k / sigma
///
/// An object is flagged when the non-strict restatement of a definitional
/// predicate decides it differently, which happens exactly at overlap == k.
/// The probabilistic sum forms (overlap >= beta * sigma, overlap >= alpha *
/// sigma) are checked too.
struct ThresholdFormRow {
    std::size_t object;
    bool upper_definitional;
    bool upper_ratio_strict;
    bool upper_ratio_nonstrict;
    bool lower_definitional;
    bool lower_ratio;
    bool prob_forms_agree;

    bool consistent() const {
        return upper_definitional == upper_ratio_strict && lower_definitional == lower_ratio && prob_forms_agree;
    }
    bool flagged() const { return upper_definitional != upper_ratio_nonstrict; }
};

struct ThresholdFormReport {
    std::vector<ThresholdFormRow> rows;

    bool all_consistent() const;
    ObjectSet flagged(std::size_t universe_size) const;
};

ThresholdFormReport threshold_form_check(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t,
                                         Grade k);

} // namespace dqr

#pragma once

#include "dqr/core_model.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace dqr {

enum class OpId {
    Prob,
    Grade,
    Dq1, // disjunctive double-quantitative: prob AND grade
    Dq2, // conjunctive double-quantitative: prob OR grade
    MgProb1,
    MgProb2,
    MgGrade1,
    MgGrade2,
    MgDq1,
    MgDq2,
};

inline constexpr OpId kAllOps[] = {OpId::Prob,    OpId::Grade,   OpId::Dq1,      OpId::Dq2,      OpId::MgProb1,
                                   OpId::MgProb2, OpId::MgGrade1, OpId::MgGrade2, OpId::MgDq1, OpId::MgDq2};

// Canonical id: "prob", "grade", "dq1", "dq2", "mg-prob1", ... "mg-dq2".
std::string_view op_name(OpId op);

// Accepts canonical ids and the "-all"/"-any" aliases ("dq-all" = dq1,
// "mg-grade-any" = mg-grade2). Throws ParameterError on anything else.
OpId parse_op_id(std::string_view text);

bool is_multi_granulation(OpId op);
bool uses_thresholds(OpId op);
bool uses_grades(OpId op);
// TypeI for *1 ops, TypeII for *2 ops; nullopt for prob and grade.
std::optional<Combinator> combinator_of(OpId op);

std::string_view mode_name(ResidualMode mode);
ResidualMode parse_mode(std::string_view text);

/// Parameter bundle for operator dispatch. Single-covering operators use
/// vectors of length one.
struct OperatorParams {
    ThresholdVector thresholds;
    GradeVector grades;
    ResidualMode mode = ResidualMode::Residual;
};

/// Result of any approximation operator.
struct ApproximationResult {
    OpId op;
    OperatorParams params;
    ObjectSet lower;
    ObjectSet upper;

    ApproximationPair pair() const { return {lower, upper}; }
};

} // namespace dqr

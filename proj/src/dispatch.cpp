#include "dqr/dispatch.hpp"

#include "dqr/error.hpp"

namespace dqr {

namespace {

const NeighborhoodTable& only_table(std::span<const NeighborhoodTable> tables, OpId op) {
    if (tables.size() != 1)
        throw ParameterError(std::string(op_name(op)) + " works on one covering, got " +
                             std::to_string(tables.size()));
    return tables.front();
}

const ThresholdPair& only_pair(const OperatorParams& p, OpId op) {
    if (p.thresholds.size() != 1)
        throw ParameterError(std::string(op_name(op)) + " needs exactly one (alpha, beta) pair");
    return p.thresholds.front();
}

Grade only_grade(const OperatorParams& p, OpId op) {
    if (p.grades.size() != 1)
        throw ParameterError(std::string(op_name(op)) + " needs exactly one grade k");
    return p.grades.front();
}

} // namespace

ApproximationResult evaluate(OpId op, std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                             const OperatorParams& params) {
    switch (op) {
    case OpId::Prob: return prob_approx(only_table(tables, op), X, only_pair(params, op));
    case OpId::Grade: return grade_approx(only_table(tables, op), X, only_grade(params, op), params.mode);
    case OpId::Dq1:
        return dq_disjunctive(only_table(tables, op), X, only_pair(params, op), only_grade(params, op), params.mode);
    case OpId::Dq2:
        return dq_conjunctive(only_table(tables, op), X, only_pair(params, op), only_grade(params, op), params.mode);
    case OpId::MgProb1: return mg_prob(tables, X, params.thresholds, Combinator::TypeI);
    case OpId::MgProb2: return mg_prob(tables, X, params.thresholds, Combinator::TypeII);
    case OpId::MgGrade1: return mg_grade(tables, X, params.grades, Combinator::TypeI, params.mode);
    case OpId::MgGrade2: return mg_grade(tables, X, params.grades, Combinator::TypeII, params.mode);
    case OpId::MgDq1: return mg_dq(tables, X, params.thresholds, params.grades, Combinator::TypeI, params.mode);
    case OpId::MgDq2: return mg_dq(tables, X, params.thresholds, params.grades, Combinator::TypeII, params.mode);
    }
    throw ParameterError("unknown operator");
}

} // namespace dqr

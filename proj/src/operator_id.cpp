#include "dqr/operator_id.hpp"

#include "dqr/error.hpp"

#include <string>
#include <utility>

namespace dqr {

namespace {

struct Alias {
    std::string_view text;
    OpId op;
};

constexpr Alias kAliases[] = {
    {"prob", OpId::Prob},
    {"grade", OpId::Grade},
    {"dq1", OpId::Dq1},
    {"dq-all", OpId::Dq1},
    {"dq2", OpId::Dq2},
    {"dq-any", OpId::Dq2},
    {"mg-prob1", OpId::MgProb1},
    {"mg-prob-all", OpId::MgProb1},
    {"mg-prob2", OpId::MgProb2},
    {"mg-prob-any", OpId::MgProb2},
    {"mg-grade1", OpId::MgGrade1},
    {"mg-grade-all", OpId::MgGrade1},
    {"mg-grade2", OpId::MgGrade2},
    {"mg-grade-any", OpId::MgGrade2},
    {"mg-dq1", OpId::MgDq1},
    {"mg-dq-all", OpId::MgDq1},
    {"mg-dq2", OpId::MgDq2},
    {"mg-dq-any", OpId::MgDq2},
};

} // namespace

std::string_view op_name(OpId op) {
    switch (op) {
    case OpId::Prob: return "prob";
    case OpId::Grade: return "grade";
    case OpId::Dq1: return "dq1";
    case OpId::Dq2: return "dq2";
    case OpId::MgProb1: return "mg-prob1";
    case OpId::MgProb2: return "mg-prob2";
    case OpId::MgGrade1: return "mg-grade1";
    case OpId::MgGrade2: return "mg-grade2";
    case OpId::MgDq1: return "mg-dq1";
    case OpId::MgDq2: return "mg-dq2";
    }
    __builtin_unreachable();
}

OpId parse_op_id(std::string_view text) {
    for (const auto& a : kAliases)
        if (a.text == text)
            return a.op;
    throw ParameterError("unknown operator id \"" + std::string(text) + "\"");
}

bool is_multi_granulation(OpId op) {
    switch (op) {
    case OpId::MgProb1:
    case OpId::MgProb2:
    case OpId::MgGrade1:
    case OpId::MgGrade2:
    case OpId::MgDq1:
    case OpId::MgDq2: return true;
    default: return false;
    }
}

bool uses_thresholds(OpId op) {
    switch (op) {
    case OpId::Grade:
    case OpId::MgGrade1:
    case OpId::MgGrade2: return false;
    default: return true;
    }
}

bool uses_grades(OpId op) {
    switch (op) {
    case OpId::Prob:
    case OpId::MgProb1:
    case OpId::MgProb2: return false;
    default: return true;
    }
}

std::optional<Combinator> combinator_of(OpId op) {
    switch (op) {
    case OpId::Dq1:
    case OpId::MgProb1:
    case OpId::MgGrade1:
    case OpId::MgDq1: return Combinator::TypeI;
    case OpId::Dq2:
    case OpId::MgProb2:
    case OpId::MgGrade2:
    case OpId::MgDq2: return Combinator::TypeII;
    default: return std::nullopt;
    }
}

std::string_view mode_name(ResidualMode mode) {
    return mode == ResidualMode::Residual ? "residual" : "complement";
}

ResidualMode parse_mode(std::string_view text) {
    if (text == "residual")
        return ResidualMode::Residual;
    if (text == "complement")
        return ResidualMode::ComplementCut;
    throw ParameterError("unknown residual mode \"" + std::string(text) + "\" (expected residual|complement)");
}

} // namespace dqr

#include "dqr/multi_granulation.hpp"

#include "dqr/error.hpp"

namespace dqr {

namespace {

void require_length(std::size_t got, std::size_t want, const char* what) {
    if (want == 0)
        throw ParameterError("multi-granulation operators need at least one covering");
    if (got != want)
        throw ParameterError(std::string(what) + " vector has " + std::to_string(got) + " entries, system has " +
                             std::to_string(want) + " coverings");
}

OpId mg_op(OpId type1, OpId type2, Combinator c) {
    return c == Combinator::TypeI ? type1 : type2;
}

// Evaluates lower/upper predicates per covering and folds them with AND
// (TypeI) or OR (TypeII).
template <class Lower, class Upper>
void fuse(std::span<const NeighborhoodTable> tables, const FuzzySet& X, Combinator c, ApproximationResult& r,
          Lower lower_pred, Upper upper_pred) {
    const std::size_t n = X.size();
    const bool all = c == Combinator::TypeI;
    r.lower = all ? ObjectSet::full(n) : ObjectSet(n);
    r.upper = all ? ObjectSet::full(n) : ObjectSet(n);
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const auto ms = measure(tables[i], X);
        for (std::size_t x = 0; x < n; ++x) {
            const bool lo = lower_pred(i, ms[x]);
            const bool up = upper_pred(i, ms[x]);
            if (all) {
                r.lower.assign(x, r.lower.contains(x) && lo);
                r.upper.assign(x, r.upper.contains(x) && up);
            } else {
                r.lower.assign(x, r.lower.contains(x) || lo);
                r.upper.assign(x, r.upper.contains(x) || up);
            }
        }
    }
}

} // namespace

ApproximationResult mg_prob(std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                            std::span<const ThresholdPair> thresholds, Combinator combinator) {
    require_length(thresholds.size(), tables.size(), "threshold");
    ApproximationResult r{mg_op(OpId::MgProb1, OpId::MgProb2, combinator),
                          OperatorParams{{thresholds.begin(), thresholds.end()}, {}, ResidualMode::Residual},
                          {},
                          {}};
    fuse(
        tables, X, combinator, r,
        [&](std::size_t i, const ObjectMeasures& m) { return prob_at_least(m, thresholds[i].alpha()); },
        [&](std::size_t i, const ObjectMeasures& m) { return prob_at_least(m, thresholds[i].beta()); });
    return r;
}

ApproximationResult mg_grade(std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                             std::span<const Grade> grades, Combinator combinator, ResidualMode mode) {
    require_length(grades.size(), tables.size(), "grade");
    ApproximationResult r{mg_op(OpId::MgGrade1, OpId::MgGrade2, combinator),
                          OperatorParams{{}, {grades.begin(), grades.end()}, mode},
                          {},
                          {}};
    fuse(
        tables, X, combinator, r,
        [&](std::size_t i, const ObjectMeasures& m) { return grade_lower_holds(m, grades[i], mode); },
        [&](std::size_t i, const ObjectMeasures& m) { return grade_upper_holds(m, grades[i]); });
    return r;
}

ApproximationResult mg_dq(std::span<const NeighborhoodTable> tables, const FuzzySet& X,
                          std::span<const ThresholdPair> thresholds, std::span<const Grade> grades,
                          Combinator combinator, ResidualMode mode) {
    require_length(thresholds.size(), tables.size(), "threshold");
    require_length(grades.size(), tables.size(), "grade");
    ApproximationResult r{mg_op(OpId::MgDq1, OpId::MgDq2, combinator),
                          OperatorParams{{thresholds.begin(), thresholds.end()}, {grades.begin(), grades.end()}, mode},
                          {},
                          {}};
    const bool all = combinator == Combinator::TypeI;
    fuse(
        tables, X, combinator, r,
        [&](std::size_t i, const ObjectMeasures& m) {
            const bool p = prob_at_least(m, thresholds[i].alpha());
            const bool g = grade_lower_holds(m, grades[i], mode);
            return all ? (p && g) : (p || g);
        },
        [&](std::size_t i, const ObjectMeasures& m) {
            const bool p = prob_at_least(m, thresholds[i].beta());
            const bool g = grade_upper_holds(m, grades[i]);
            return all ? (p && g) : (p || g);
        });
    return r;
}

bool vector_leq(std::span<const ThresholdPair> a, std::span<const ThresholdPair> b) {
    if (a.size() != b.size())
        throw ParameterError("threshold vectors differ in length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].alpha() > b[i].alpha() || a[i].beta() > b[i].beta())
            return false;
    return true;
}

bool vector_leq(std::span<const Grade> a, std::span<const Grade> b) {
    if (a.size() != b.size())
        throw ParameterError("grade vectors differ in length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].k > b[i].k)
            return false;
    return true;
}

} // namespace dqr

#include "dqr/single_granulation.hpp"

#include "dqr/error.hpp"

#include <algorithm>

namespace dqr {

namespace {

using wide = __int128;

void require_target(const NeighborhoodTable& table, const FuzzySet& X) {
    if (!same_universe(table.universe, X.universe()))
        throw StructuralError("target set and covering \"" + table.covering + "\" use different universes");
}

OperatorParams single_params(const ThresholdPair* t, const Grade* k, ResidualMode mode) {
    OperatorParams p;
    if (t)
        p.thresholds.push_back(*t);
    if (k)
        p.grades.push_back(*k);
    p.mode = mode;
    return p;
}

} // namespace

std::vector<ObjectMeasures> measure(const NeighborhoodTable& table, const FuzzySet& X) {
    require_target(table, X);
    std::vector<ObjectMeasures> out(table.size());
    for (std::size_t x = 0; x < table.size(); ++x) {
        const auto& row = table.rows[x];
        ObjectMeasures& m = out[x];
        m.sigma = table.sigma[x];
        for (std::size_t y = 0; y < row.size(); ++y) {
            const Degree cut = std::min(X[y], row[y]);
            m.overlap += cut.value();
            m.residual += row[y].value() - cut.value();
            m.complement_mass += std::min(X[y].complement(), row[y]).value();
        }
    }
    return out;
}

bool prob_at_least(const ObjectMeasures& m, Degree threshold) {
    return m.probability().at_least(threshold.value());
}

bool grade_upper_holds(const ObjectMeasures& m, Grade k) {
    return m.overlap > k.k;
}

bool grade_lower_holds(const ObjectMeasures& m, Grade k, ResidualMode mode) {
    return m.mass(mode) <= k.k;
}

Ratio cond_prob(const NeighborhoodTable& table, const FuzzySet& X, std::size_t x) {
    require_target(table, X);
    if (x >= table.size())
        throw ParameterError("object index " + std::to_string(x) + " out of range");
    Decimal overlap;
    const auto& row = table.rows[x];
    for (std::size_t y = 0; y < row.size(); ++y)
        overlap += std::min(X[y], row[y]).value();
    return Ratio{overlap, table.sigma[x]};
}

ApproximationResult prob_approx(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t) {
    const auto ms = measure(table, X);
    ApproximationResult r{OpId::Prob, single_params(&t, nullptr, ResidualMode::Residual), ObjectSet(ms.size()),
                          ObjectSet(ms.size())};
    for (std::size_t x = 0; x < ms.size(); ++x) {
        r.lower.assign(x, prob_at_least(ms[x], t.alpha()));
        r.upper.assign(x, prob_at_least(ms[x], t.beta()));
    }
    return r;
}

ThreeRegions prob_regions(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t) {
    const auto ms = measure(table, X);
    ThreeRegions r{ObjectSet(ms.size()), ObjectSet(ms.size()), ObjectSet(ms.size())};
    for (std::size_t x = 0; x < ms.size(); ++x) {
        if (prob_at_least(ms[x], t.alpha()))
            r.pos.insert(x);
        else if (prob_at_least(ms[x], t.beta()))
            r.bou.insert(x);
        else
            r.neg.insert(x);
    }
    return r;
}

ApproximationResult grade_approx(const NeighborhoodTable& table, const FuzzySet& X, Grade k, ResidualMode mode) {
    const auto ms = measure(table, X);
    ApproximationResult r{OpId::Grade, single_params(nullptr, &k, mode), ObjectSet(ms.size()), ObjectSet(ms.size())};
    for (std::size_t x = 0; x < ms.size(); ++x) {
        r.lower.assign(x, grade_lower_holds(ms[x], k, mode));
        r.upper.assign(x, grade_upper_holds(ms[x], k));
    }
    return r;
}

FiveRegions grade_regions(const NeighborhoodTable& table, const FuzzySet& X, Grade k, ResidualMode mode) {
    return five_regions_of(grade_approx(table, X, k, mode).pair());
}

ApproximationResult dq_disjunctive(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t, Grade k,
                                   ResidualMode mode) {
    const auto ms = measure(table, X);
    ApproximationResult r{OpId::Dq1, single_params(&t, &k, mode), ObjectSet(ms.size()), ObjectSet(ms.size())};
    for (std::size_t x = 0; x < ms.size(); ++x) {
        r.lower.assign(x, prob_at_least(ms[x], t.alpha()) && grade_lower_holds(ms[x], k, mode));
        r.upper.assign(x, prob_at_least(ms[x], t.beta()) && grade_upper_holds(ms[x], k));
    }
    return r;
}

ApproximationResult dq_conjunctive(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t, Grade k,
                                   ResidualMode mode) {
    const auto ms = measure(table, X);
    ApproximationResult r{OpId::Dq2, single_params(&t, &k, mode), ObjectSet(ms.size()), ObjectSet(ms.size())};
    for (std::size_t x = 0; x < ms.size(); ++x) {
        r.lower.assign(x, prob_at_least(ms[x], t.alpha()) || grade_lower_holds(ms[x], k, mode));
        r.upper.assign(x, prob_at_least(ms[x], t.beta()) || grade_upper_holds(ms[x], k));
    }
    return r;
}

bool ThresholdFormReport::all_consistent() const {
    return std::all_of(rows.begin(), rows.end(), [](const ThresholdFormRow& r) { return r.consistent(); });
}

ObjectSet ThresholdFormReport::flagged(std::size_t universe_size) const {
    ObjectSet s(universe_size);
    for (const auto& r : rows)
        if (r.flagged())
            s.insert(r.object);
    return s;
}

ThresholdFormReport threshold_form_check(const NeighborhoodTable& table, const FuzzySet& X, const ThresholdPair& t,
                                         Grade k) {
    const auto ms = measure(table, X);
    ThresholdFormReport report;
    report.rows.reserve(ms.size());
    for (std::size_t x = 0; x < ms.size(); ++x) {
        const auto& m = ms[x];
        // Ratio forms: P = overlap / sigma is compared with k / sigma and
        // with 1 - k / sigma = (sigma - k) / sigma. Cross-multiplying both
        // fractions by sigma * sigma keeps everything in integers.
        const wide lhs = wide{m.overlap.micros()} * m.sigma.micros();
        const wide upper_rhs = wide{k.k.micros()} * m.sigma.micros();
        const wide lower_rhs = wide{(m.sigma - k.k).micros()} * m.sigma.micros();

        const wide beta_rhs = wide{t.beta().micros()} * m.sigma.micros();
        const wide alpha_rhs = wide{t.alpha().micros()} * m.sigma.micros();
        const wide scaled_overlap = wide{m.overlap.micros()} * Decimal::kScale;
        const bool prob_agree = (scaled_overlap >= beta_rhs) == prob_at_least(m, t.beta()) &&
                                (scaled_overlap >= alpha_rhs) == prob_at_least(m, t.alpha());

        report.rows.push_back(ThresholdFormRow{
            x,
            grade_upper_holds(m, k),
            lhs > upper_rhs,
            lhs >= upper_rhs,
            grade_lower_holds(m, k, ResidualMode::Residual),
            lhs >= lower_rhs,
            prob_agree,
        });
    }
    return report;
}

} // namespace dqr

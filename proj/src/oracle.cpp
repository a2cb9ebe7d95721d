#include "dqr/oracle.hpp"

#include "dqr/error.hpp"

#include <cstdint>

namespace dqr::oracle {

namespace {

using i128 = __int128;
constexpr std::int64_t kOne = Decimal::kScale;

void require_crisp(const FuzzyCovering& c) {
    for (const auto& m : c.members())
        for (Degree d : m.set.degrees())
            if (d.micros() != 0 && d.micros() != kOne)
                throw ParameterError("crisp operator given fuzzy member \"" + m.name + "\"");
}

// Raw micro-unit neighborhood of x, rebuilt from the members every call.
std::vector<std::int64_t> raw_neighborhood(const FuzzyCovering& c, std::size_t x) {
    const std::size_t n = c.universe()->size();
    std::vector<std::int64_t> row(n, kOne);
    bool any = false;
    for (const auto& m : c.members()) {
        if (m.set[x].micros() < c.gamma().micros())
            continue;
        any = true;
        for (std::size_t y = 0; y < n; ++y) {
            const std::int64_t v = m.set[y].micros();
            if (v < row[y])
                row[y] = v;
        }
    }
    if (!any)
        throw ValidationError("object " + c.universe()->name(x) + " has no qualifying member");
    return row;
}

struct Sums {
    std::int64_t sigma = 0;
    std::int64_t overlap = 0;
    std::int64_t residual = 0;
    std::int64_t complement = 0;
};

Sums sums_at(const FuzzyCovering& c, const FuzzySet& X, std::size_t x) {
    const auto row = raw_neighborhood(c, x);
    Sums s;
    for (std::size_t y = 0; y < row.size(); ++y) {
        const std::int64_t xv = X[y].micros();
        const std::int64_t nv = row[y];
        const std::int64_t cut = xv < nv ? xv : nv;
        const std::int64_t notx = kOne - xv;
        s.sigma += nv;
        s.overlap += cut;
        s.residual += nv - cut;
        s.complement += notx < nv ? notx : nv;
    }
    return s;
}

// overlap / sigma >= t
bool ratio_reaches(const Sums& s, Degree t) {
    return static_cast<i128>(s.overlap) * kOne >= static_cast<i128>(t.micros()) * s.sigma;
}

bool upper_grade(const Sums& s, Grade k) {
    return s.overlap > k.k.micros();
}

bool lower_grade(const Sums& s, Grade k, ResidualMode mode) {
    const std::int64_t mass = mode == ResidualMode::Residual ? s.residual : s.complement;
    return mass <= k.k.micros();
}

struct Verdict {
    bool lower;
    bool upper;
};

// Defining predicate of a single-covering operator at one object.
Verdict single_verdict(OpId op, const Sums& s, const ThresholdPair* t, const Grade* k, ResidualMode mode) {
    switch (op) {
    case OpId::Prob:
    case OpId::MgProb1:
    case OpId::MgProb2: return {ratio_reaches(s, t->alpha()), ratio_reaches(s, t->beta())};
    case OpId::Grade:
    case OpId::MgGrade1:
    case OpId::MgGrade2: return {lower_grade(s, *k, mode), upper_grade(s, *k)};
    case OpId::Dq1:
    case OpId::MgDq1:
        return {ratio_reaches(s, t->alpha()) && lower_grade(s, *k, mode),
                ratio_reaches(s, t->beta()) && upper_grade(s, *k)};
    case OpId::Dq2:
    case OpId::MgDq2:
        return {ratio_reaches(s, t->alpha()) || lower_grade(s, *k, mode),
                ratio_reaches(s, t->beta()) || upper_grade(s, *k)};
    }
    return {false, false};
}

bool needs_thresholds(OpId op) {
    return op != OpId::Grade && op != OpId::MgGrade1 && op != OpId::MgGrade2;
}

bool needs_grades(OpId op) {
    return op != OpId::Prob && op != OpId::MgProb1 && op != OpId::MgProb2;
}

bool is_all(OpId op) {
    return op == OpId::MgProb1 || op == OpId::MgGrade1 || op == OpId::MgDq1;
}

bool is_single(OpId op) {
    return op == OpId::Prob || op == OpId::Grade || op == OpId::Dq1 || op == OpId::Dq2;
}

} // namespace

ObjectSet crisp_neighborhood(const FuzzyCovering& covering, std::size_t x) {
    require_crisp(covering);
    const std::size_t n = covering.universe()->size();
    ObjectSet out(n);
    for (std::size_t y = 0; y < n; ++y) {
        bool in_all = true;
        for (const auto& m : covering.members())
            if (m.set[x].micros() == kOne && m.set[y].micros() == 0)
                in_all = false;
        out.assign(y, in_all);
    }
    return out;
}

ApproximationPair crisp_pawlak(const FuzzyCovering& covering, const ObjectSet& X) {
    const std::size_t n = covering.universe()->size();
    ApproximationPair p{ObjectSet(n), ObjectSet(n)};
    for (std::size_t x = 0; x < n; ++x) {
        const ObjectSet nb = crisp_neighborhood(covering, x);
        p.lower.assign(x, nb.is_subset_of(X));
        p.upper.assign(x, !nb.disjoint_with(X));
    }
    return p;
}

CrispProbResult crisp_prob(const FuzzyCovering& covering, const ObjectSet& X, const ThresholdPair& t) {
    const std::size_t n = covering.universe()->size();
    CrispProbResult r{{ObjectSet(n), ObjectSet(n)}, {ObjectSet(n), ObjectSet(n), ObjectSet(n)}};
    for (std::size_t x = 0; x < n; ++x) {
        const ObjectSet nb = crisp_neighborhood(covering, x);
        const i128 hit = static_cast<i128>((nb & X).count());
        const i128 size = static_cast<i128>(nb.count());
        const bool ge_alpha = hit * kOne >= t.alpha().micros() * size;
        const bool ge_beta = hit * kOne >= t.beta().micros() * size;
        r.approx.lower.assign(x, ge_alpha);
        r.approx.upper.assign(x, ge_beta);
        r.regions.pos.assign(x, ge_alpha);
        r.regions.bou.assign(x, ge_beta && !ge_alpha);
        r.regions.neg.assign(x, !ge_beta);
    }
    return r;
}

CrispGradeResult crisp_grade(const FuzzyCovering& covering, const ObjectSet& X, Grade k) {
    const std::size_t n = covering.universe()->size();
    CrispGradeResult r{{ObjectSet(n), ObjectSet(n)}, {}};
    const ObjectSet notX = X.complement();
    for (std::size_t x = 0; x < n; ++x) {
        const ObjectSet nb = crisp_neighborhood(covering, x);
        const std::int64_t hit = static_cast<std::int64_t>((nb & X).count()) * kOne;
        const std::int64_t miss = static_cast<std::int64_t>((nb & notX).count()) * kOne;
        r.approx.upper.assign(x, hit > k.k.micros());
        r.approx.lower.assign(x, miss <= k.k.micros());
    }
    const auto& up = r.approx.upper;
    const auto& lo = r.approx.lower;
    r.regions.pos = up & lo;
    r.regions.neg = (up | lo).complement();
    r.regions.lbo = lo - up;
    r.regions.ubo = up - lo;
    r.regions.bou = r.regions.lbo | r.regions.ubo;
    return r;
}

ApproximationResult brute_force(OpId op, std::span<const FuzzyCovering> coverings, const FuzzySet& X,
                                const OperatorParams& params) {
    const std::size_t m = coverings.size();
    if (m == 0)
        throw ParameterError("brute_force needs at least one covering");
    if (is_single(op) && m != 1)
        throw ParameterError("single-covering operator given " + std::to_string(m) + " coverings");
    if (needs_thresholds(op) && params.thresholds.size() != m)
        throw ParameterError("threshold vector length mismatch");
    if (needs_grades(op) && params.grades.size() != m)
        throw ParameterError("grade vector length mismatch");
    for (const auto& c : coverings)
        if (!same_universe(c.universe(), X.universe()))
            throw StructuralError("target and covering use different universes");

    const std::size_t n = X.size();
    ApproximationResult r{op, params, ObjectSet(n), ObjectSet(n)};
    const bool all = is_single(op) || is_all(op);
    for (std::size_t x = 0; x < n; ++x) {
        bool lower = all;
        bool upper = all;
        for (std::size_t i = 0; i < m; ++i) {
            const Sums s = sums_at(coverings[i], X, x);
            const ThresholdPair* t = needs_thresholds(op) ? &params.thresholds[i] : nullptr;
            const Grade* k = needs_grades(op) ? &params.grades[i] : nullptr;
            const Verdict v = single_verdict(op, s, t, k, params.mode);
            if (all) {
                lower = lower && v.lower;
                upper = upper && v.upper;
            } else {
                lower = lower || v.lower;
                upper = upper || v.upper;
            }
        }
        r.lower.assign(x, lower);
        r.upper.assign(x, upper);
    }
    return r;
}

ThreeRegions brute_prob_regions(const FuzzyCovering& covering, const FuzzySet& X, const ThresholdPair& t) {
    const std::size_t n = X.size();
    ThreeRegions r{ObjectSet(n), ObjectSet(n), ObjectSet(n)};
    for (std::size_t x = 0; x < n; ++x) {
        const Sums s = sums_at(covering, X, x);
        const bool a = ratio_reaches(s, t.alpha());
        const bool b = ratio_reaches(s, t.beta());
        r.pos.assign(x, a);
        r.bou.assign(x, b && !a);
        r.neg.assign(x, !b);
    }
    return r;
}

FiveRegions brute_grade_regions(const FuzzyCovering& covering, const FuzzySet& X, Grade k, ResidualMode mode) {
    const std::size_t n = X.size();
    FiveRegions r{ObjectSet(n), ObjectSet(n), ObjectSet(n), ObjectSet(n), ObjectSet(n)};
    for (std::size_t x = 0; x < n; ++x) {
        const Sums s = sums_at(covering, X, x);
        const bool up = upper_grade(s, k);
        const bool lo = lower_grade(s, k, mode);
        r.pos.assign(x, up && lo);
        r.neg.assign(x, !up && !lo);
        r.lbo.assign(x, lo && !up);
        r.ubo.assign(x, up && !lo);
        r.bou.assign(x, up != lo);
    }
    return r;
}

ObjectSet brute_overlap_equals(const FuzzyCovering& covering, const FuzzySet& X, Grade k) {
    const std::size_t n = X.size();
    ObjectSet out(n);
    for (std::size_t x = 0; x < n; ++x)
        out.assign(x, sums_at(covering, X, x).overlap == k.k.micros());
    return out;
}

} // namespace dqr::oracle

#include "dqr/differential.hpp"

#include "dqr/dispatch.hpp"
#include "dqr/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace dqr {

namespace {

std::string set_text(const ObjectSet& s, const Universe& u) {
    std::string out = "{";
    for (std::size_t i : s.members())
        out += (out.size() > 1 ? "," : "") + u.name(i);
    return out + "}";
}

std::string params_text(const OperatorParams& p) {
    std::ostringstream out;
    for (const auto& t : p.thresholds)
        out << " (" << t.alpha().to_string() << "," << t.beta().to_string() << ")";
    for (const auto& k : p.grades)
        out << " k=" << k.k.to_string();
    out << " mode=" << mode_name(p.mode);
    return out.str();
}

struct Candidates {
    std::vector<Degree> thresholds;
    std::vector<Decimal> grades;
};

Candidates candidates_for(Rng& rng, const NeighborhoodTable& table, const FuzzySet& X) {
    Candidates c;
    c.thresholds = {Degree::zero(), Degree::one()};
    for (const auto& m : measure(table, X)) {
        // P itself, when it lands on the decimal grid.
        const __int128 scaled = static_cast<__int128>(m.overlap.micros()) * Decimal::kScale;
        if (scaled % m.sigma.micros() == 0)
            c.thresholds.push_back(Degree(Decimal::from_micros(static_cast<std::int64_t>(scaled / m.sigma.micros()))));
        c.grades.push_back(m.overlap);
        c.grades.push_back(m.residual);
        c.grades.push_back(m.complement_mass);
    }
    for (int i = 0; i < 3; ++i) {
        c.thresholds.push_back(Degree(Decimal::from_micros(rng.between(0, 20) * 50'000)));
        c.grades.push_back(Decimal::from_micros(rng.between(0, 2 * static_cast<std::int64_t>(table.size()) * 10) *
                                                100'000));
    }
    c.grades.push_back(Decimal::from_micros(-500'000));
    return c;
}

ThresholdPair draw_pair(Rng& rng, const Candidates& c) {
    Degree a = rng.pick(c.thresholds);
    Degree b = rng.pick(c.thresholds);
    if (b > a)
        std::swap(a, b);
    return ThresholdPair(a, b);
}

bool hits_boundary(const NeighborhoodTable& table, const FuzzySet& X, const OperatorParams& p, std::size_t i) {
    for (const auto& m : measure(table, X)) {
        if (i < p.thresholds.size() &&
            (m.probability() == Ratio{p.thresholds[i].alpha().value(), Decimal::from_int(1)} ||
             m.probability() == Ratio{p.thresholds[i].beta().value(), Decimal::from_int(1)}))
            return true;
        if (i < p.grades.size() && (m.overlap == p.grades[i].k || m.mass(p.mode) == p.grades[i].k))
            return true;
    }
    return false;
}

} // namespace

std::string DifferentialReport::summary() const {
    std::ostringstream out;
    out << "differential: " << instances << " instances, " << evaluations << " evaluations, " << boundary_hits
        << " boundary draws, " << mismatches.size() << " mismatches";
    return out.str();
}

void check_instance(Rng& rng, std::span<const FuzzyCovering> coverings, std::span<const NeighborhoodTable> tables,
                    const FuzzySet& X, const std::string& label, DifferentialReport& report) {
    const Universe& u = *X.universe();
    const std::size_t m = coverings.size();
    std::vector<Candidates> cands;
    for (const auto& t : tables)
        cands.push_back(candidates_for(rng, t, X));
    report.objects_seen.insert(u.size());
    report.coverings_seen.insert(m);
    for (const auto& c : coverings)
        report.members_seen.insert(c.member_count());

    auto mismatch = [&](std::string_view what, OpId op, const OperatorParams& p, const std::string& got,
                        const std::string& want) {
        report.mismatches.push_back(label + ": " + std::string(what) + " " + std::string(op_name(op)) + params_text(p) +
                                    " main=" + got + " oracle=" + want);
    };

    for (ResidualMode mode : {ResidualMode::Residual, ResidualMode::ComplementCut}) {
        for (OpId op : kAllOps) {
            const bool multi = is_multi_granulation(op);
            const std::size_t first = multi ? 0 : rng.below(m);
            const std::size_t count = multi ? m : 1;
            OperatorParams p;
            p.mode = mode;
            for (std::size_t i = first; i < first + count; ++i) {
                if (uses_thresholds(op))
                    p.thresholds.push_back(draw_pair(rng, cands[i]));
                if (uses_grades(op))
                    p.grades.push_back(Grade{rng.pick(cands[i].grades)});
            }
            const auto my_tables = tables.subspan(first, count);
            const auto my_covs = coverings.subspan(first, count);
            for (std::size_t i = 0; i < count; ++i)
                if (hits_boundary(my_tables[i], X, p, i)) {
                    ++report.boundary_hits;
                    break;
                }

            const auto got = evaluate(op, my_tables, X, p);
            const auto want = oracle::brute_force(op, my_covs, X, p);
            ++report.evaluations;
            if (got.lower != want.lower)
                mismatch("lower", op, p, set_text(got.lower, u), set_text(want.lower, u));
            if (got.upper != want.upper)
                mismatch("upper", op, p, set_text(got.upper, u), set_text(want.upper, u));

            if (op == OpId::Prob) {
                ++report.evaluations;
                if (prob_regions(my_tables[0], X, p.thresholds[0]) !=
                    oracle::brute_prob_regions(my_covs[0], X, p.thresholds[0]))
                    mismatch("regions", op, p, "", "");
            }
            if (op == OpId::Grade) {
                ++report.evaluations;
                if (grade_regions(my_tables[0], X, p.grades[0], mode) !=
                    oracle::brute_grade_regions(my_covs[0], X, p.grades[0], mode))
                    mismatch("regions", op, p, "", "");
                if (mode == ResidualMode::Residual) {
                    ++report.evaluations;
                    const auto forms = threshold_form_check(my_tables[0], X, draw_pair(rng, cands[first]), p.grades[0]);
                    const auto flagged = forms.flagged(u.size());
                    const auto exact = oracle::brute_overlap_equals(my_covs[0], X, p.grades[0]);
                    if (!forms.all_consistent() || flagged != exact)
                        mismatch("threshold forms", op, p, set_text(flagged, u), set_text(exact, u));
                }
            }
        }
    }
    ++report.instances;
}

DifferentialReport run_random_differential(std::uint64_t seed, std::size_t count) {
    DifferentialReport report;
    Rng rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const GenConfig config = random_config(rng);
        const std::uint64_t sys_seed = rng.below(UINT64_MAX);
        const auto gen = generate_system(config, sys_seed);
        const MultiGranulationSystem system(gen.coverings);
        const auto tables = build_tables(system);
        check_instance(rng, gen.coverings, tables, gen.targets.front().set,
                       "seed " + std::to_string(seed) + " instance " + std::to_string(i), report);
    }
    return report;
}

DifferentialReport run_system_differential(const MultiGranulationSystem& system, std::span<const NamedSet> targets,
                                           std::uint64_t seed, std::size_t rounds) {
    DifferentialReport report;
    Rng rng(seed);
    const auto tables = build_tables(system);
    for (const auto& t : targets)
        for (std::size_t r = 0; r < rounds; ++r)
            check_instance(rng, system.coverings(), tables, t.set, "target " + t.name + " round " + std::to_string(r),
                           report);
    return report;
}

} // namespace dqr

// Randomized property suites. Every suite runs kInstances seeded instances
// and checks exact set relations.

#include "dqr/generator.hpp"
#include "dqr/multi_granulation.hpp"
#include "dqr/oracle.hpp"

#include <gtest/gtest.h>

#include <optional>

using namespace dqr;

namespace {

constexpr int kInstances = 1000;

struct Instance {
    GeneratedSystem gen;
    std::optional<MultiGranulationSystem> system;
    std::vector<NeighborhoodTable> tables;
    FuzzySet X;
    int decimals;

    const NeighborhoodTable& t0() const { return tables.front(); }
    const UniversePtr& u() const { return gen.universe; }
    std::size_t n() const { return gen.universe->size(); }
    std::size_t m() const { return tables.size(); }
};

Instance make_instance(Rng& rng, bool crisp = false) {
    GenConfig c = random_config(rng);
    if (crisp) {
        c.decimals = 0;
        c.gammas = {Degree::one()};
    }
    auto gen = generate_system(c, rng.below(1ull << 62));
    FuzzySet X = gen.targets.front().set;
    Instance in{std::move(gen), std::nullopt, {}, std::move(X), c.decimals};
    in.system.emplace(in.gen.coverings);
    in.tables = build_tables(*in.system);
    return in;
}

FuzzySet other_set(Rng& rng, const Instance& in) {
    return random_fuzzy_set(rng, in.u(), in.decimals);
}

Degree grid_degree(Rng& rng) {
    return Degree(Decimal::from_micros(rng.between(0, 20) * 50'000));
}

ThresholdPair random_pair(Rng& rng) {
    Degree a = grid_degree(rng), b = grid_degree(rng);
    if (b > a)
        std::swap(a, b);
    return ThresholdPair(a, b);
}

Grade random_grade(Rng& rng, std::size_t n) {
    return Grade{Decimal::from_micros(rng.between(0, static_cast<std::int64_t>(n) * 10) * 100'000)};
}

ThresholdVector random_pairs(Rng& rng, std::size_t m) {
    ThresholdVector v;
    for (std::size_t i = 0; i < m; ++i)
        v.push_back(random_pair(rng));
    return v;
}

GradeVector random_grades(Rng& rng, std::size_t m, std::size_t n) {
    GradeVector v;
    for (std::size_t i = 0; i < m; ++i)
        v.push_back(random_grade(rng, n));
    return v;
}

bool pair_subset(const ApproximationResult& a, const ApproximationResult& b) {
    return a.lower.is_subset_of(b.lower) && a.upper.is_subset_of(b.upper);
}

} // namespace

// ---- probabilistic, Theorem 4.7 ----

TEST(ProbProperties, UniverseAndEmptySet) {
    Rng rng(101);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto t = random_pair(rng);
        EXPECT_EQ(prob_approx(in.t0(), FuzzySet::full(in.u()), t).lower, ObjectSet::full(in.n()));
        if (t.beta() > Degree::zero())
            EXPECT_TRUE(prob_approx(in.t0(), FuzzySet::empty(in.u()), t).upper.empty());
    }
}

TEST(ProbProperties, MonotoneInTarget) {
    Rng rng(102);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto Y = fs_union(in.X, other_set(rng, in));
        const auto t = random_pair(rng);
        EXPECT_TRUE(pair_subset(prob_approx(in.t0(), in.X, t), prob_approx(in.t0(), Y, t)));
    }
}

TEST(ProbProperties, UnionAndIntersectionContainments) {
    Rng rng(103);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto Y = other_set(rng, in);
        const auto t = random_pair(rng);
        const auto x = prob_approx(in.t0(), in.X, t);
        const auto y = prob_approx(in.t0(), Y, t);
        const auto both = prob_approx(in.t0(), fs_intersect(in.X, Y), t);
        const auto either = prob_approx(in.t0(), fs_union(in.X, Y), t);
        EXPECT_TRUE(both.lower.is_subset_of(x.lower & y.lower));
        EXPECT_TRUE((x.lower | y.lower).is_subset_of(either.lower));
        EXPECT_TRUE(both.upper.is_subset_of(x.upper & y.upper));
        EXPECT_TRUE((x.upper | y.upper).is_subset_of(either.upper));
    }
}

TEST(ProbProperties, AntiMonotoneInThresholds) {
    Rng rng(104);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto t1 = random_pair(rng);
        const auto t2 = random_pair(rng);
        const ThresholdPair lo(std::min(t1.alpha(), t2.alpha()), std::min(t1.beta(), t2.beta()));
        const ThresholdPair hi(std::max(t1.alpha(), t2.alpha()), std::max(t1.beta(), t2.beta()));
        EXPECT_TRUE(pair_subset(prob_approx(in.t0(), in.X, hi), prob_approx(in.t0(), in.X, lo)));
    }
}

TEST(ProbProperties, LowerInsideUpperAndRegionsPartition) {
    Rng rng(105);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto t = random_pair(rng);
        const auto r = prob_approx(in.t0(), in.X, t);
        EXPECT_TRUE(r.lower.is_subset_of(r.upper));
        const auto regions = prob_regions(in.t0(), in.X, t);
        EXPECT_TRUE(regions.is_partition());
        EXPECT_EQ(regions, three_regions_of(r.pair()));
    }
}

// ---- grade, Theorem 4.12 with the directions the definitions force ----

TEST(GradeProperties, UniverseAndEmptySet) {
    Rng rng(201);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto k = random_grade(rng, in.n());
        EXPECT_EQ(grade_approx(in.t0(), FuzzySet::full(in.u()), k).lower, ObjectSet::full(in.n()));
        EXPECT_TRUE(grade_approx(in.t0(), FuzzySet::empty(in.u()), k).upper.empty());
    }
}

TEST(GradeProperties, MonotoneInTarget) {
    Rng rng(202);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto Y = fs_union(in.X, other_set(rng, in));
        const auto k = random_grade(rng, in.n());
        for (auto mode : {ResidualMode::Residual, ResidualMode::ComplementCut})
            EXPECT_TRUE(pair_subset(grade_approx(in.t0(), in.X, k, mode), grade_approx(in.t0(), Y, k, mode)));
    }
}

TEST(GradeProperties, UnionAndIntersectionContainments) {
    Rng rng(203);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto Y = other_set(rng, in);
        const auto k = random_grade(rng, in.n());
        const auto x = grade_approx(in.t0(), in.X, k);
        const auto y = grade_approx(in.t0(), Y, k);
        const auto both = grade_approx(in.t0(), fs_intersect(in.X, Y), k);
        const auto either = grade_approx(in.t0(), fs_union(in.X, Y), k);
        EXPECT_TRUE(both.lower.is_subset_of(x.lower & y.lower));
        EXPECT_TRUE((x.lower | y.lower).is_subset_of(either.lower));
        EXPECT_TRUE(both.upper.is_subset_of(x.upper & y.upper));
        EXPECT_TRUE((x.upper | y.upper).is_subset_of(either.upper));
    }
}

// k1 <= k2: upper_k2 is inside upper_k1 (strict overlap > k), lower_k1 is
// inside lower_k2 (mass <= k). The second is the reverse of the printed
// direction of item (9).
TEST(GradeProperties, GradeDirections) {
    Rng rng(204);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        Grade k1 = random_grade(rng, in.n()), k2 = random_grade(rng, in.n());
        if (k2.k < k1.k)
            std::swap(k1, k2);
        for (auto mode : {ResidualMode::Residual, ResidualMode::ComplementCut}) {
            const auto a = grade_approx(in.t0(), in.X, k1, mode);
            const auto b = grade_approx(in.t0(), in.X, k2, mode);
            EXPECT_TRUE(b.upper.is_subset_of(a.upper));
            EXPECT_TRUE(a.lower.is_subset_of(b.lower));
        }
    }
}

TEST(GradeProperties, FiveRegionsPartition) {
    Rng rng(205);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto k = random_grade(rng, in.n());
        for (auto mode : {ResidualMode::Residual, ResidualMode::ComplementCut}) {
            const auto r = grade_regions(in.t0(), in.X, k, mode);
            EXPECT_TRUE(r.is_partition());
            EXPECT_EQ(r, five_regions_of(grade_approx(in.t0(), in.X, k, mode).pair()));
        }
    }
}

// ---- double-quantitative decomposition ----

TEST(DqProperties, Decomposition) {
    Rng rng(301);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto t = random_pair(rng);
        const auto k = random_grade(rng, in.n());
        for (auto mode : {ResidualMode::Residual, ResidualMode::ComplementCut}) {
            const auto p = prob_approx(in.t0(), in.X, t);
            const auto g = grade_approx(in.t0(), in.X, k, mode);
            const auto d1 = dq_disjunctive(in.t0(), in.X, t, k, mode);
            const auto d2 = dq_conjunctive(in.t0(), in.X, t, k, mode);
            EXPECT_EQ(d1.lower, p.lower & g.lower);
            EXPECT_EQ(d1.upper, p.upper & g.upper);
            EXPECT_EQ(d2.lower, p.lower | g.lower);
            EXPECT_EQ(d2.upper, p.upper | g.upper);
            EXPECT_TRUE(pair_subset(d1, d2));
        }
    }
}

// ---- multi-granulation ----

TEST(MgProperties, DecompositionAcrossCoverings) {
    Rng rng(401);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto tv = random_pairs(rng, in.m());
        const auto kv = random_grades(rng, in.m(), in.n());
        for (auto mode : {ResidualMode::Residual, ResidualMode::ComplementCut}) {
            auto all_p = ObjectSet::full(in.n()), all_pu = ObjectSet::full(in.n());
            auto any_p = ObjectSet(in.n()), any_pu = ObjectSet(in.n());
            auto all_g = ObjectSet::full(in.n()), all_gu = ObjectSet::full(in.n());
            auto any_g = ObjectSet(in.n()), any_gu = ObjectSet(in.n());
            auto all_d = ObjectSet::full(in.n()), all_du = ObjectSet::full(in.n());
            auto any_d = ObjectSet(in.n()), any_du = ObjectSet(in.n());
            for (std::size_t c = 0; c < in.m(); ++c) {
                const auto p = prob_approx(in.tables[c], in.X, tv[c]);
                const auto g = grade_approx(in.tables[c], in.X, kv[c], mode);
                const auto d1 = dq_disjunctive(in.tables[c], in.X, tv[c], kv[c], mode);
                const auto d2 = dq_conjunctive(in.tables[c], in.X, tv[c], kv[c], mode);
                all_p = all_p & p.lower, all_pu = all_pu & p.upper;
                any_p = any_p | p.lower, any_pu = any_pu | p.upper;
                all_g = all_g & g.lower, all_gu = all_gu & g.upper;
                any_g = any_g | g.lower, any_gu = any_gu | g.upper;
                all_d = all_d & d1.lower, all_du = all_du & d1.upper;
                any_d = any_d | d2.lower, any_du = any_du | d2.upper;
            }
            const auto p1 = mg_prob(in.tables, in.X, tv, Combinator::TypeI);
            const auto p2 = mg_prob(in.tables, in.X, tv, Combinator::TypeII);
            const auto g1 = mg_grade(in.tables, in.X, kv, Combinator::TypeI, mode);
            const auto g2 = mg_grade(in.tables, in.X, kv, Combinator::TypeII, mode);
            const auto d1 = mg_dq(in.tables, in.X, tv, kv, Combinator::TypeI, mode);
            const auto d2 = mg_dq(in.tables, in.X, tv, kv, Combinator::TypeII, mode);
            EXPECT_EQ(p1.pair(), (ApproximationPair{all_p, all_pu}));
            EXPECT_EQ(p2.pair(), (ApproximationPair{any_p, any_pu}));
            EXPECT_EQ(g1.pair(), (ApproximationPair{all_g, all_gu}));
            EXPECT_EQ(g2.pair(), (ApproximationPair{any_g, any_gu}));
            EXPECT_EQ(d1.pair(), (ApproximationPair{all_d, all_du}));
            EXPECT_EQ(d2.pair(), (ApproximationPair{any_d, any_du}));
            // Fused double-quantitative results split into the fused components.
            EXPECT_EQ(d1.pair(), (ApproximationPair{p1.lower & g1.lower, p1.upper & g1.upper}));
            EXPECT_EQ(d2.pair(), (ApproximationPair{p2.lower | g2.lower, p2.upper | g2.upper}));
        }
    }
}

TEST(MgProperties, TypeIInsideTypeII) {
    Rng rng(402);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto tv = random_pairs(rng, in.m());
        const auto kv = random_grades(rng, in.m(), in.n());
        EXPECT_TRUE(pair_subset(mg_prob(in.tables, in.X, tv, Combinator::TypeI),
                                mg_prob(in.tables, in.X, tv, Combinator::TypeII)));
        EXPECT_TRUE(pair_subset(mg_grade(in.tables, in.X, kv, Combinator::TypeI),
                                mg_grade(in.tables, in.X, kv, Combinator::TypeII)));
        EXPECT_TRUE(pair_subset(mg_dq(in.tables, in.X, tv, kv, Combinator::TypeI),
                                mg_dq(in.tables, in.X, tv, kv, Combinator::TypeII)));
    }
}

TEST(MgProperties, MonotoneInTargetAndParameters) {
    Rng rng(403);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        const auto Y = fs_union(in.X, other_set(rng, in));
        const auto ta = random_pairs(rng, in.m());
        const auto tb = random_pairs(rng, in.m());
        ThresholdVector lo, hi;
        for (std::size_t c = 0; c < in.m(); ++c) {
            lo.emplace_back(std::min(ta[c].alpha(), tb[c].alpha()), std::min(ta[c].beta(), tb[c].beta()));
            hi.emplace_back(std::max(ta[c].alpha(), tb[c].alpha()), std::max(ta[c].beta(), tb[c].beta()));
        }
        ASSERT_TRUE(vector_leq(lo, hi));
        const auto ka = random_grades(rng, in.m(), in.n());
        const auto kb = random_grades(rng, in.m(), in.n());
        GradeVector k1, k2;
        for (std::size_t c = 0; c < in.m(); ++c) {
            k1.push_back(Grade{std::min(ka[c].k, kb[c].k)});
            k2.push_back(Grade{std::max(ka[c].k, kb[c].k)});
        }
        ASSERT_TRUE(vector_leq(k1, k2));
        for (auto c : {Combinator::TypeI, Combinator::TypeII}) {
            EXPECT_TRUE(pair_subset(mg_prob(in.tables, in.X, lo, c), mg_prob(in.tables, Y, lo, c)));
            EXPECT_TRUE(pair_subset(mg_grade(in.tables, in.X, k1, c), mg_grade(in.tables, Y, k1, c)));
            EXPECT_TRUE(pair_subset(mg_dq(in.tables, in.X, lo, k1, c), mg_dq(in.tables, Y, lo, k1, c)));
            EXPECT_TRUE(pair_subset(mg_prob(in.tables, in.X, hi, c), mg_prob(in.tables, in.X, lo, c)));
            const auto small = mg_grade(in.tables, in.X, k1, c);
            const auto large = mg_grade(in.tables, in.X, k2, c);
            EXPECT_TRUE(large.upper.is_subset_of(small.upper));
            EXPECT_TRUE(small.lower.is_subset_of(large.lower));
        }
    }
}

TEST(MgProperties, EdgeLaws) {
    Rng rng(404);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng);
        auto tv = random_pairs(rng, in.m());
        const auto kv = random_grades(rng, in.m(), in.n());
        const auto U = FuzzySet::full(in.u());
        const auto E = FuzzySet::empty(in.u());
        bool beta_positive = true;
        for (const auto& t : tv)
            beta_positive = beta_positive && t.beta() > Degree::zero();
        for (auto c : {Combinator::TypeI, Combinator::TypeII}) {
            EXPECT_EQ(mg_prob(in.tables, U, tv, c).lower, ObjectSet::full(in.n()));
            EXPECT_EQ(mg_grade(in.tables, U, kv, c).lower, ObjectSet::full(in.n()));
            EXPECT_TRUE(mg_grade(in.tables, E, kv, c).upper.empty());
            if (beta_positive)
                EXPECT_TRUE(mg_prob(in.tables, E, tv, c).upper.empty());
        }
    }
}

// ---- crisp reduction ----

TEST(CrispReduction, FuzzyOperatorsMatchCrispOnes) {
    Rng rng(501);
    for (int i = 0; i < kInstances; ++i) {
        const auto in = make_instance(rng, true);
        ASSERT_TRUE(in.X.is_crisp());
        const auto& cov = in.system->coverings().front();
        const ApproximationSpace space(cov);
        const ObjectSet X = in.X.support();
        for (std::size_t x = 0; x < in.n(); ++x) {
            EXPECT_EQ(crisp_neighborhood(space, x), oracle::crisp_neighborhood(cov, x));
            EXPECT_EQ(in.t0().rows[x].support(), oracle::crisp_neighborhood(cov, x));
        }

        const auto t = random_pair(rng);
        const auto crisp_p = oracle::crisp_prob(cov, X, t);
        EXPECT_EQ(prob_approx(in.t0(), in.X, t).pair(), crisp_p.approx);
        EXPECT_EQ(prob_regions(in.t0(), in.X, t), crisp_p.regions);

        const auto k = random_grade(rng, in.n());
        const auto crisp_g = oracle::crisp_grade(cov, X, k);
        for (auto mode : {ResidualMode::Residual, ResidualMode::ComplementCut}) {
            EXPECT_EQ(grade_approx(in.t0(), in.X, k, mode).pair(), crisp_g.approx);
            EXPECT_EQ(grade_regions(in.t0(), in.X, k, mode), crisp_g.regions);
        }

        const auto pawlak = oracle::crisp_pawlak(cov, X);
        EXPECT_EQ(prob_approx(in.t0(), in.X, ThresholdPair(Degree::one(), Degree::zero())).lower, pawlak.lower);
        EXPECT_EQ(grade_approx(in.t0(), in.X, Grade{Decimal{}}).upper, pawlak.upper);
    }
}

#include "dqr/error.hpp"
#include "dqr/single_granulation.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace dqr;
using namespace fixtures;

namespace {

using Names = std::vector<std::string>;

const Names kAll{"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"};

ThresholdPair t75_25() {
    return ThresholdPair::parse("0.75", "0.25");
}

Grade k(const char* v) {
    return Grade::parse(v);
}

} // namespace

TEST(CondProb, PriceCoveringValues) {
    const PaperData d;
    EXPECT_EQ(cond_prob(d.t1, d.X, 0).to_string(), "1/2");
    EXPECT_EQ(cond_prob(d.t1, d.X, 2).to_string(), "25/33");
    EXPECT_EQ(cond_prob(d.t1, d.X, 1).to_string(), "16/25");
    const auto full = FuzzySet::full(d.u);
    for (std::size_t x = 0; x < 8; ++x)
        EXPECT_EQ(cond_prob(d.t1, full, x).to_string(), "1");
}

TEST(Measures, PriceCoveringSums) {
    const PaperData d;
    const auto ms = measure(d.t1, d.X);
    const Names overlap{"2.6", "3.2", "2.5", "2.6", "2.6", "2.5", "2.6", "3.2"};
    const Names residual{"2.6", "1.8", "0.8", "2.6", "2.6", "0.8", "2.6", "1.8"};
    const Names complement{"3.3", "3.6", "2.2", "3.3", "3.3", "2.2", "3.3", "3.6"};
    for (std::size_t x = 0; x < 8; ++x) {
        EXPECT_EQ(ms[x].overlap.to_string(), overlap[x]);
        EXPECT_EQ(ms[x].residual.to_string(), residual[x]);
        EXPECT_EQ(ms[x].complement_mass.to_string(), complement[x]);
    }
}

TEST(ProbApprox, Example44) {
    const PaperData d;
    const auto r = prob_approx(d.t1, d.X, t75_25());
    EXPECT_EQ(names(r.lower, d.u), (Names{"x3", "x6"}));
    EXPECT_EQ(names(r.upper, d.u), kAll);
    EXPECT_EQ(r.op, OpId::Prob);
}

TEST(ProbApprox, Edges) {
    const PaperData d;
    EXPECT_EQ(prob_approx(d.t1, FuzzySet::full(d.u), t75_25()).lower, ObjectSet::full(8));
    EXPECT_TRUE(prob_approx(d.t1, FuzzySet::empty(d.u), t75_25()).upper.empty());
    // P = 1/2 exactly at x1: non-strict, so alpha = 0.5 includes it.
    const auto at = prob_approx(d.t1, d.X, ThresholdPair::parse("0.5", "0.5"));
    EXPECT_EQ(at.lower, ObjectSet::full(8));
}

TEST(ProbRegions, Example46) {
    const PaperData d;
    const auto r = prob_regions(d.t1, d.X, t75_25());
    EXPECT_EQ(names(r.pos, d.u), (Names{"x3", "x6"}));
    EXPECT_EQ(names(r.bou, d.u), (Names{"x1", "x2", "x4", "x5", "x7", "x8"}));
    EXPECT_TRUE(r.neg.empty());
    EXPECT_TRUE(r.is_partition());
    EXPECT_TRUE(prob_regions(d.t1, d.X, ThresholdPair::parse("0.6", "0.6")).bou.empty());
}

TEST(GradeApprox, Example49) {
    const PaperData d;
    const auto r = grade_approx(d.t1, d.X, k("2"));
    EXPECT_EQ(names(r.lower, d.u), (Names{"x2", "x3", "x6", "x8"}));
    EXPECT_EQ(names(r.upper, d.u), kAll);
}

TEST(GradeApprox, LargeGradeGivesFullLower) {
    const PaperData d;
    EXPECT_EQ(grade_approx(d.t1, d.X, k("5.2")).lower, ObjectSet::full(8));
}

TEST(GradeApprox, ComplementCutOnSecondCovering) {
    const PaperData d;
    EXPECT_TRUE(grade_approx(d.both[1], d.X, k("2"), ResidualMode::ComplementCut).lower.empty());
    EXPECT_EQ(grade_approx(d.both[1], d.X, k("2")).lower, ObjectSet::full(8));
}

TEST(GradeApprox, NegativeGrade) {
    const PaperData d;
    const auto r = grade_approx(d.t1, d.X, k("-1"));
    EXPECT_TRUE(r.lower.empty());
    EXPECT_EQ(r.upper, ObjectSet::full(8));
}

TEST(GradeApprox, UpperIsStrictAtTheBoundary) {
    const PaperData d;
    // overlap is 2.6 at x1, x4, x5, x7 and 2.5 at x3, x6.
    const auto r = grade_approx(d.t1, d.X, k("2.6"));
    EXPECT_EQ(names(r.upper, d.u), (Names{"x2", "x8"}));
    // residual is 2.6 at x1: lower is non-strict and includes it.
    EXPECT_EQ(r.lower, ObjectSet::full(8));
}

TEST(GradeRegions, Example411) {
    const PaperData d;
    const auto r = grade_regions(d.t1, d.X, k("2"));
    EXPECT_EQ(names(r.pos, d.u), (Names{"x2", "x3", "x6", "x8"}));
    EXPECT_TRUE(r.neg.empty());
    EXPECT_TRUE(r.lbo.empty());
    EXPECT_EQ(names(r.ubo, d.u), (Names{"x1", "x4", "x5", "x7"}));
    EXPECT_EQ(r.bou, r.ubo);
    EXPECT_TRUE(r.is_partition());
}

TEST(DoubleQuantitative, Example52) {
    const PaperData d;
    const auto r = dq_disjunctive(d.t1, d.X, t75_25(), k("2"));
    EXPECT_EQ(names(r.lower, d.u), (Names{"x3", "x6"}));
    EXPECT_EQ(names(r.upper, d.u), kAll);
    EXPECT_EQ(r.op, OpId::Dq1);
}

TEST(DoubleQuantitative, Example57) {
    const PaperData d;
    const auto r = dq_conjunctive(d.t1, d.X, t75_25(), k("2"));
    EXPECT_EQ(names(r.lower, d.u), (Names{"x2", "x3", "x6", "x8"}));
    EXPECT_EQ(names(r.upper, d.u), kAll);
    EXPECT_EQ(r.op, OpId::Dq2);
}

TEST(DoubleQuantitative, Edges) {
    const PaperData d;
    EXPECT_TRUE(dq_disjunctive(d.t1, FuzzySet::empty(d.u), t75_25(), k("0")).upper.empty());
    EXPECT_EQ(dq_conjunctive(d.t1, FuzzySet::full(d.u), t75_25(), k("0")).lower, ObjectSet::full(8));
}

TEST(ThresholdForms, AllAgreeOnExampleData) {
    const PaperData d;
    const auto report = threshold_form_check(d.t1, d.X, t75_25(), k("2"));
    EXPECT_TRUE(report.all_consistent());
    EXPECT_TRUE(report.flagged(8).empty());
}

TEST(ThresholdForms, FlagsOverlapEqualToK) {
    const PaperData d;
    const auto report = threshold_form_check(d.t1, d.X, t75_25(), k("2.5"));
    EXPECT_TRUE(report.all_consistent());
    EXPECT_EQ(names(report.flagged(8), d.u), (Names{"x3", "x6"}));
    EXPECT_FALSE(grade_approx(d.t1, d.X, k("2.5")).upper.contains(2));
}

TEST(ThresholdForms, ZeroGradeWithPositiveOverlap) {
    const PaperData d;
    const auto report = threshold_form_check(d.t1, d.X, t75_25(), k("0"));
    EXPECT_TRUE(report.all_consistent());
    for (const auto& row : report.rows) {
        EXPECT_TRUE(row.upper_definitional);
        EXPECT_TRUE(row.upper_ratio_nonstrict);
    }
}

TEST(Measures, ForeignUniverseIsStructuralError) {
    const PaperData d;
    EXPECT_THROW(measure(d.t1, FuzzySet::full(Universe::make({"a"}))), StructuralError);
}

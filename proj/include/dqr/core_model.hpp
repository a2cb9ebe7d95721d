#pragma once

#include "dqr/decimal.hpp"
#include "dqr/sets.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dqr {

/// Ordered, finite, non-empty list of distinct object names. The order is the
/// canonical index order for every vector and every emitted set.
class Universe {
public:
    // Throws ValidationError on an empty list or a duplicate name.
    explicit Universe(std::vector<std::string> names);

    static std::shared_ptr<const Universe> make(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    bool operator==(const Universe& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// Same universe, by identity or by identical name list.
bool same_universe(const UniversePtr& a, const UniversePtr& b);

/// Membership vector over a universe.
class FuzzySet {
public:
    // Throws StructuralError when the vector length differs from the universe size.
    FuzzySet(UniversePtr universe, std::vector<Degree> degrees);

    static FuzzySet empty(UniversePtr universe);
    static FuzzySet full(UniversePtr universe);
    // Characteristic vector of a crisp set.
    static FuzzySet characteristic(UniversePtr universe, const ObjectSet& members);
    // Parses one degree string per object.
    static FuzzySet parse(UniversePtr universe, std::span<const std::string> degrees);

    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return degrees_.size(); }
    Degree operator[](std::size_t i) const { return degrees_[i]; }
    Degree at(std::size_t i) const { return degrees_.at(i); }
    std::span<const Degree> degrees() const { return degrees_; }

    // Some membership is positive.
    bool non_empty() const;
    // Every membership is 0 or 1.
    bool is_crisp() const;
    // {x : degree(x) > 0}; for crisp sets this is the set itself.
    ObjectSet support() const;

    bool operator==(const FuzzySet& o) const;

private:
    UniversePtr universe_;
    std::vector<Degree> degrees_;
};

FuzzySet fs_union(const FuzzySet& a, const FuzzySet& b);
FuzzySet fs_intersect(const FuzzySet& a, const FuzzySet& b);
FuzzySet fs_complement(const FuzzySet& a);
bool fs_subset(const FuzzySet& a, const FuzzySet& b);
Decimal fs_sigma_count(const FuzzySet& a);

struct NamedSet {
    std::string name;
    FuzzySet set;
};

/// Named family of fuzzy sets with its covering threshold gamma.
///
/// Construction only checks shape (at least one member, one universe,
/// gamma in (0,1]). The gamma-covering property itself is checked by
/// validate_covering and enforced by ApproximationSpace and
/// MultiGranulationSystem.
class FuzzyCovering {
public:
    FuzzyCovering(std::string name, UniversePtr universe, std::vector<NamedSet> members, Degree gamma);

    const std::string& name() const { return name_; }
    const UniversePtr& universe() const { return universe_; }
    const std::vector<NamedSet>& members() const { return members_; }
    std::size_t member_count() const { return members_.size(); }
    Degree gamma() const { return gamma_; }

private:
    std::string name_;
    UniversePtr universe_;
    std::vector<NamedSet> members_;
    Degree gamma_;
};

struct CoveringViolation {
    enum class Clause {
        EmptyMember,    // a member has no positive degree
        UncoveredObject // max over members at an object is below gamma
    };
    Clause clause;
    std::string subject; // member name or object name
    std::string detail;
};

struct ValidationReport {
    std::string covering;
    std::vector<CoveringViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

ValidationReport validate_covering(const FuzzyCovering& c);

/// A fuzzy gamma-covering that passed validation.
class ApproximationSpace {
public:
    // Throws ValidationError with the report text when invalid.
    explicit ApproximationSpace(FuzzyCovering covering);

    const UniversePtr& universe() const { return covering_.universe(); }
    const FuzzyCovering& covering() const { return covering_; }

private:
    FuzzyCovering covering_;
};

/// Family of validated coverings over one universe, each with its own gamma.
class MultiGranulationSystem {
public:
    // Throws ValidationError on an empty family, mixed universes or any
    // covering that fails validation.
    explicit MultiGranulationSystem(std::vector<FuzzyCovering> coverings);

    const UniversePtr& universe() const { return coverings_.front().universe(); }
    const std::vector<FuzzyCovering>& coverings() const { return coverings_; }
    std::size_t size() const { return coverings_.size(); }

private:
    std::vector<FuzzyCovering> coverings_;
};

/// Probabilistic thresholds with 0 <= beta <= alpha <= 1.
class ThresholdPair {
public:
    // Throws ParameterError when the order is violated.
    ThresholdPair(Degree alpha, Degree beta);
    static ThresholdPair parse(std::string_view alpha, std::string_view beta);

    Degree alpha() const { return alpha_; }
    Degree beta() const { return beta_; }

    bool operator==(const ThresholdPair&) const = default;

private:
    Degree alpha_;
    Degree beta_;
};

/// Absolute grade threshold k. Negative values are accepted: the grade
/// lower approximation is then empty and the upper one is the universe.
struct Grade {
    Decimal k;

    static Grade parse(std::string_view text) { return Grade{Decimal::parse(text)}; }
    bool operator==(const Grade&) const = default;
};

using ThresholdVector = std::vector<ThresholdPair>;
using GradeVector = std::vector<Grade>;

/// How the grade lower approximation measures the mass of a neighborhood
/// that falls outside X.
enum class ResidualMode {
    Residual,     // sum_y N(y) - min(X(y), N(y))
    ComplementCut // sum_y min(1 - X(y), N(y))
};

/// How per-covering predicates are fused across a multi-granulation system.
enum class Combinator {
    TypeI, // all coverings (conjunction); the "disjunctive" operators
    TypeII // some covering (disjunction); the "conjunctive" operators
};

struct ExpertReport {
    std::string expert;
    std::vector<NamedSet> values;
};

/// Pointwise-max union of same-named expert values, without validation.
/// Throws ValidationError when experts disagree on the value names.
FuzzyCovering merge_expert_reports(std::string name, std::span<const ExpertReport> reports, Degree gamma);

/// Builds a covering whose member for each value name is the pointwise max
/// over all experts. Throws ValidationError when experts disagree on the value
/// names or when the union fails the gamma-covering check.
FuzzyCovering build_covering_from_reports(std::string name, std::span<const ExpertReport> reports, Degree gamma);

} // namespace dqr

#include "dqr/core_model.hpp"

#include "dqr/error.hpp"

#include <algorithm>
#include <sstream>

namespace dqr {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw ValidationError("universe must contain at least one object");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw ValidationError("object " + std::to_string(i) + " has an empty name");
        if (!index_.emplace(names_[i], i).second)
            throw ValidationError("duplicate object name \"" + names_[i] + "\"");
    }
}

std::shared_ptr<const Universe> Universe::make(std::vector<std::string> names) {
    return std::make_shared<const Universe>(std::move(names));
}

std::optional<std::size_t> Universe::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

namespace {

void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
    if (!same_universe(a.universe(), b.universe()))
        throw StructuralError("fuzzy sets are defined over different universes");
}

} // namespace

FuzzySet::FuzzySet(UniversePtr universe, std::vector<Degree> degrees)
    : universe_(std::move(universe)), degrees_(std::move(degrees)) {
    if (!universe_)
        throw StructuralError("fuzzy set without a universe");
    if (degrees_.size() != universe_->size())
        throw StructuralError("membership vector has " + std::to_string(degrees_.size()) +
                              " entries, universe has " + std::to_string(universe_->size()));
}

FuzzySet FuzzySet::empty(UniversePtr universe) {
    const auto n = universe->size();
    return FuzzySet(std::move(universe), std::vector<Degree>(n, Degree::zero()));
}

FuzzySet FuzzySet::full(UniversePtr universe) {
    const auto n = universe->size();
    return FuzzySet(std::move(universe), std::vector<Degree>(n, Degree::one()));
}

FuzzySet FuzzySet::characteristic(UniversePtr universe, const ObjectSet& members) {
    if (members.universe_size() != universe->size())
        throw StructuralError("object set does not match universe size");
    std::vector<Degree> d(universe->size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = members.contains(i) ? Degree::one() : Degree::zero();
    return FuzzySet(std::move(universe), std::move(d));
}

FuzzySet FuzzySet::parse(UniversePtr universe, std::span<const std::string> degrees) {
    std::vector<Degree> d;
    d.reserve(degrees.size());
    for (const auto& s : degrees)
        d.push_back(Degree::parse(s));
    return FuzzySet(std::move(universe), std::move(d));
}

bool FuzzySet::non_empty() const {
    return std::any_of(degrees_.begin(), degrees_.end(), [](Degree d) { return d > Degree::zero(); });
}

bool FuzzySet::is_crisp() const {
    return std::all_of(degrees_.begin(), degrees_.end(),
                       [](Degree d) { return d == Degree::zero() || d == Degree::one(); });
}

ObjectSet FuzzySet::support() const {
    ObjectSet s(degrees_.size());
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        s.assign(i, degrees_[i] > Degree::zero());
    return s;
}

bool FuzzySet::operator==(const FuzzySet& o) const {
    return same_universe(universe_, o.universe_) && degrees_ == o.degrees_;
}

FuzzySet fs_union(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a, b);
    std::vector<Degree> d(a.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = std::max(a[i], b[i]);
    return FuzzySet(a.universe(), std::move(d));
}

FuzzySet fs_intersect(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a, b);
    std::vector<Degree> d(a.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = std::min(a[i], b[i]);
    return FuzzySet(a.universe(), std::move(d));
}

FuzzySet fs_complement(const FuzzySet& a) {
    std::vector<Degree> d(a.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        d[i] = a[i].complement();
    return FuzzySet(a.universe(), std::move(d));
}

bool fs_subset(const FuzzySet& a, const FuzzySet& b) {
    require_same_universe(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Decimal fs_sigma_count(const FuzzySet& a) {
    Decimal sum;
    for (Degree d : a.degrees())
        sum += d.value();
    return sum;
}

FuzzyCovering::FuzzyCovering(std::string name, UniversePtr universe, std::vector<NamedSet> members, Degree gamma)
    : name_(std::move(name)), universe_(std::move(universe)), members_(std::move(members)), gamma_(gamma) {
    if (members_.empty())
        throw ValidationError("covering \"" + name_ + "\" has no members");
    if (gamma_ == Degree::zero())
        throw ValidationError("covering \"" + name_ + "\": gamma must lie in (0,1]");
    for (const auto& m : members_)
        if (!same_universe(universe_, m.set.universe()))
            throw StructuralError("covering \"" + name_ + "\": member \"" + m.name + "\" uses another universe");
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    if (ok()) {
        out << "covering \"" << covering << "\": valid";
        return out.str();
    }
    out << "covering \"" << covering << "\": " << violations.size() << " violation(s)";
    for (const auto& v : violations) {
        out << "\n  ";
        out << (v.clause == CoveringViolation::Clause::EmptyMember ? "[non-empty members] " : "[gamma-covering] ");
        out << v.subject << ": " << v.detail;
    }
    return out.str();
}

ValidationReport validate_covering(const FuzzyCovering& c) {
    ValidationReport report{c.name(), {}};
    for (const auto& m : c.members())
        if (!m.set.non_empty())
            report.violations.push_back(
                {CoveringViolation::Clause::EmptyMember, m.name, "member has no positive membership"});

    const auto& u = *c.universe();
    for (std::size_t x = 0; x < u.size(); ++x) {
        Degree best = Degree::zero();
        for (const auto& m : c.members())
            best = std::max(best, m.set[x]);
        if (best < c.gamma())
            report.violations.push_back({CoveringViolation::Clause::UncoveredObject, u.name(x),
                                         "max degree " + best.to_string() + " < gamma " + c.gamma().to_string()});
    }
    return report;
}

ApproximationSpace::ApproximationSpace(FuzzyCovering covering) : covering_(std::move(covering)) {
    const auto report = validate_covering(covering_);
    if (!report.ok())
        throw ValidationError(report.to_string());
}

MultiGranulationSystem::MultiGranulationSystem(std::vector<FuzzyCovering> coverings)
    : coverings_(std::move(coverings)) {
    if (coverings_.empty())
        throw ValidationError("a multi-granulation system needs at least one covering");
    for (const auto& c : coverings_) {
        if (!same_universe(c.universe(), coverings_.front().universe()))
            throw ValidationError("covering \"" + c.name() + "\" is defined over a different universe");
        const auto report = validate_covering(c);
        if (!report.ok())
            throw ValidationError(report.to_string());
    }
}

ThresholdPair::ThresholdPair(Degree alpha, Degree beta) : alpha_(alpha), beta_(beta) {
    if (beta_ > alpha_)
        throw ParameterError("thresholds require beta <= alpha (alpha=" + alpha_.to_string() +
                             ", beta=" + beta_.to_string() + ")");
}

ThresholdPair ThresholdPair::parse(std::string_view alpha, std::string_view beta) {
    auto as_degree = [](std::string_view s) {
        try {
            return Degree::parse(s);
        } catch (const ParseError& e) {
            throw ParameterError(e.what());
        }
    };
    return ThresholdPair(as_degree(alpha), as_degree(beta));
}

FuzzyCovering merge_expert_reports(std::string name, std::span<const ExpertReport> reports, Degree gamma) {
    if (reports.empty())
        throw ValidationError("covering \"" + name + "\": no expert reports");

    const auto& first = reports.front();
    std::vector<NamedSet> members;
    members.reserve(first.values.size());
    for (const auto& v : first.values) {
        for (const auto& seen : members)
            if (seen.name == v.name)
                throw ValidationError("covering \"" + name + "\": expert \"" + first.expert +
                                      "\" reports value \"" + v.name + "\" twice");
        members.push_back(v);
    }

    for (const auto& r : reports.subspan(1)) {
        if (r.values.size() != members.size())
            throw ValidationError("covering \"" + name + "\": expert \"" + r.expert + "\" reports " +
                                  std::to_string(r.values.size()) + " values, expected " +
                                  std::to_string(members.size()));
        for (const auto& v : r.values) {
            auto it = std::find_if(members.begin(), members.end(), [&](const NamedSet& m) { return m.name == v.name; });
            if (it == members.end())
                throw ValidationError("covering \"" + name + "\": expert \"" + r.expert + "\" reports unknown value \"" +
                                      v.name + "\"");
            it->set = fs_union(it->set, v.set);
        }
    }

    if (members.empty())
        throw ValidationError("covering \"" + name + "\": expert reports list no values");
    auto universe = members.front().set.universe();
    return FuzzyCovering(std::move(name), std::move(universe), std::move(members), gamma);
}

FuzzyCovering build_covering_from_reports(std::string name, std::span<const ExpertReport> reports, Degree gamma) {
    FuzzyCovering covering = merge_expert_reports(std::move(name), reports, gamma);
    const auto report = validate_covering(covering);
    if (!report.ok())
        throw ValidationError(report.to_string());
    return covering;
}

} // namespace dqr

#include "dqr/sets.hpp"

#include "dqr/error.hpp"

#include <algorithm>
#include <string>

namespace dqr {

ObjectSet ObjectSet::full(std::size_t universe_size) {
    ObjectSet s(universe_size);
    s.bits_.assign(universe_size, true);
    return s;
}

ObjectSet ObjectSet::of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
    ObjectSet s(universe_size);
    for (std::size_t i : members)
        s.insert(i);
    return s;
}

std::size_t ObjectSet::count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::size_t> ObjectSet::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i])
            out.push_back(i);
    return out;
}

void ObjectSet::require_same_size(const ObjectSet& o) const {
    if (o.bits_.size() != bits_.size())
        throw StructuralError("object sets over universes of different size (" + std::to_string(bits_.size()) +
                              " vs " + std::to_string(o.bits_.size()) + ")");
}

bool ObjectSet::is_subset_of(const ObjectSet& other) const {
    require_same_size(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !other.bits_[i])
            return false;
    return true;
}

bool ObjectSet::disjoint_with(const ObjectSet& other) const {
    require_same_size(other);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && other.bits_[i])
            return false;
    return true;
}

ObjectSet ObjectSet::operator&(const ObjectSet& o) const {
    require_same_size(o);
    ObjectSet r(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = bits_[i] && o.bits_[i];
    return r;
}

ObjectSet ObjectSet::operator|(const ObjectSet& o) const {
    require_same_size(o);
    ObjectSet r(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = bits_[i] || o.bits_[i];
    return r;
}

ObjectSet ObjectSet::operator-(const ObjectSet& o) const {
    require_same_size(o);
    ObjectSet r(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = bits_[i] && !o.bits_[i];
    return r;
}

ObjectSet ObjectSet::complement() const {
    ObjectSet r(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i)
        r.bits_[i] = !bits_[i];
    return r;
}

bool ThreeRegions::is_partition() const {
    const auto n = pos.universe_size();
    return (pos | bou | neg) == ObjectSet::full(n) && pos.disjoint_with(bou) && pos.disjoint_with(neg) &&
           bou.disjoint_with(neg);
}

bool FiveRegions::is_partition() const {
    const auto n = pos.universe_size();
    const ObjectSet parts[] = {pos, neg, lbo, ubo};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!parts[i].disjoint_with(parts[j]))
                return false;
    return (pos | neg | lbo | ubo) == ObjectSet::full(n) && bou == (lbo | ubo);
}

ThreeRegions three_regions_of(const ApproximationPair& p) {
    return ThreeRegions{p.lower, p.upper - p.lower, p.upper.complement()};
}

FiveRegions five_regions_of(const ApproximationPair& p) {
    FiveRegions r;
    r.pos = p.upper & p.lower;
    r.neg = (p.upper | p.lower).complement();
    r.lbo = p.lower - p.upper;
    r.ubo = p.upper - p.lower;
    r.bou = r.lbo | r.ubo;
    return r;
}

} // namespace dqr

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace dqr {

/// Crisp subset of a universe, indexed by canonical object position.
class ObjectSet {
public:
    ObjectSet() = default;
    explicit ObjectSet(std::size_t universe_size) : bits_(universe_size, false) {}

    static ObjectSet full(std::size_t universe_size);
    static ObjectSet of(std::size_t universe_size, std::initializer_list<std::size_t> members);

    std::size_t universe_size() const { return bits_.size(); }
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    bool contains(std::size_t i) const { return bits_.at(i); }
    void insert(std::size_t i) { bits_.at(i) = true; }
    void erase(std::size_t i) { bits_.at(i) = false; }
    void assign(std::size_t i, bool in) { bits_.at(i) = in; }

    // Member indices in canonical order.
    std::vector<std::size_t> members() const;

    bool is_subset_of(const ObjectSet& other) const;
    bool disjoint_with(const ObjectSet& other) const;

    ObjectSet operator&(const ObjectSet& o) const;
    ObjectSet operator|(const ObjectSet& o) const;
    ObjectSet operator-(const ObjectSet& o) const;
    ObjectSet complement() const;

    bool operator==(const ObjectSet&) const = default;

private:
    void require_same_size(const ObjectSet& o) const;

    std::vector<bool> bits_;
};

struct ApproximationPair {
    ObjectSet lower;
    ObjectSet upper;

    bool operator==(const ApproximationPair&) const = default;
};

/// Positive / boundary / negative partition of a probabilistic approximation.
struct ThreeRegions {
    ObjectSet pos;
    ObjectSet bou;
    ObjectSet neg;

    bool operator==(const ThreeRegions&) const = default;
    // Union is the universe and the regions are pairwise disjoint.
    bool is_partition() const;
};

/// Grade regions. BOU is the union of the lower and upper boundaries.
struct FiveRegions {
    ObjectSet pos;
    ObjectSet neg;
    ObjectSet lbo;
    ObjectSet ubo;
    ObjectSet bou;

    bool operator==(const FiveRegions&) const = default;
    // POS, NEG, LBO, UBO partition the universe and BOU = LBO | UBO.
    bool is_partition() const;
};

// Regions induced by an arbitrary (lower, upper) pair.
ThreeRegions three_regions_of(const ApproximationPair& p);
FiveRegions five_regions_of(const ApproximationPair& p);

} // namespace dqr

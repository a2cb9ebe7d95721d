#include "dqr/neighborhood.hpp"

#include "dqr/error.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace dqr {

namespace {

std::vector<std::size_t> qualifying_members(const FuzzyCovering& c, std::size_t x) {
    std::vector<std::size_t> q;
    for (std::size_t i = 0; i < c.member_count(); ++i)
        if (c.members()[i].set[x] >= c.gamma())
            q.push_back(i);
    return q;
}

// Pointwise min over the qualifying members. The family is non-empty for a
// valid covering.
FuzzySet intersect_members(const FuzzyCovering& c, const std::vector<std::size_t>& q) {
    std::vector<Degree> d(c.universe()->size(), Degree::one());
    for (std::size_t i : q) {
        const auto& m = c.members()[i].set;
        for (std::size_t y = 0; y < d.size(); ++y)
            d[y] = std::min(d[y], m[y]);
    }
    return FuzzySet(c.universe(), std::move(d));
}

NeighborhoodTable table_for(const FuzzyCovering& c, unsigned threads) {
    const std::size_t n = c.universe()->size();
    NeighborhoodTable t{c.universe(), c.name(), c.gamma(), {}, {}, {}};
    t.qualifiers.resize(n);
    std::vector<std::optional<FuzzySet>> rows(n);

    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t x = begin; x < end; ++x) {
            t.qualifiers[x] = qualifying_members(c, x);
            rows[x] = intersect_members(c, t.qualifiers[x]);
        }
    };

    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        fill(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin < end)
                pool.emplace_back(fill, begin, end);
        }
    }

    t.rows.reserve(n);
    t.sigma.reserve(n);
    for (auto& r : rows) {
        t.sigma.push_back(fs_sigma_count(*r));
        t.rows.push_back(std::move(*r));
    }
    return t;
}

} // namespace

ObjectSet crisp_neighborhood(const ApproximationSpace& space, std::size_t x) {
    const auto& c = space.covering();
    ObjectSet n = ObjectSet::full(c.universe()->size());
    for (const auto& m : c.members()) {
        if (!m.set.is_crisp())
            throw ParameterError("crisp neighborhood needs 0/1 members; \"" + m.name + "\" is fuzzy");
        if (m.set[x] == Degree::one())
            n = n & m.set.support();
    }
    return n;
}

FuzzySet fuzzy_gamma_neighborhood(const ApproximationSpace& space, std::size_t x) {
    const auto& c = space.covering();
    if (x >= c.universe()->size())
        throw ParameterError("object index " + std::to_string(x) + " out of range");
    return intersect_members(c, qualifying_members(c, x));
}

NeighborhoodTable build_table(const ApproximationSpace& space, unsigned threads) {
    return table_for(space.covering(), threads);
}

std::vector<NeighborhoodTable> build_tables(const MultiGranulationSystem& system, unsigned threads) {
    std::vector<NeighborhoodTable> tables;
    tables.reserve(system.size());
    for (const auto& c : system.coverings())
        tables.push_back(table_for(c, threads));
    return tables;
}

} // namespace dqr

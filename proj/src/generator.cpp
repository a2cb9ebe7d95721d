#include "dqr/generator.hpp"

#include "dqr/error.hpp"

#include <limits>

namespace dqr {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0)
        throw ParameterError("Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

std::int64_t grid_step(int decimals) {
    if (decimals < 0 || decimals > Decimal::kDigits)
        throw ParameterError("decimals must lie in 0..6");
    std::int64_t step = Decimal::kScale;
    for (int i = 0; i < decimals; ++i)
        step /= 10;
    return step;
}

Degree on_grid(std::int64_t units, std::int64_t step) {
    return Degree(Decimal::from_micros(units * step));
}

Degree random_degree(Rng& rng, std::int64_t step) {
    const std::int64_t top = Decimal::kScale / step;
    const auto roll = rng.below(10);
    if (roll < 2)
        return Degree::zero();
    if (roll < 3)
        return Degree::one();
    return on_grid(rng.between(0, top), step);
}

} // namespace

FuzzySet random_fuzzy_set(Rng& rng, const UniversePtr& universe, int decimals) {
    const std::int64_t step = grid_step(decimals);
    std::vector<Degree> d(universe->size());
    for (auto& v : d)
        v = random_degree(rng, step);
    return FuzzySet(universe, std::move(d));
}

GeneratedSystem generate_system(const GenConfig& config, std::uint64_t seed) {
    if (config.objects == 0)
        throw ParameterError("need at least one object");
    if (config.coverings == 0 || config.members == 0)
        throw ParameterError("need at least one covering and one member");
    if (config.gammas.size() != 1 && config.gammas.size() != config.coverings)
        throw ParameterError("gamma list has " + std::to_string(config.gammas.size()) + " entries for " +
                             std::to_string(config.coverings) + " coverings");

    const std::int64_t step = grid_step(config.decimals);
    const std::int64_t top = Decimal::kScale / step;
    Rng rng(seed);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < config.objects; ++i)
        names.push_back("x" + std::to_string(i + 1));
    GeneratedSystem out{Universe::make(std::move(names)), {}, {}};
    const std::size_t n = config.objects;

    for (std::size_t c = 0; c < config.coverings; ++c) {
        const Degree gamma = config.gammas.size() == 1 ? config.gammas.front() : config.gammas[c];
        if (gamma == Degree::zero())
            throw ParameterError("gamma must lie in (0,1]");
        // Smallest grid point at or above gamma.
        const std::int64_t floor_units = (gamma.micros() + step - 1) / step;

        std::vector<std::vector<Degree>> rows(config.members, std::vector<Degree>(n));
        for (auto& row : rows)
            for (auto& v : row)
                v = random_degree(rng, step);
        for (std::size_t x = 0; x < n; ++x) {
            auto& cell = rows[rng.below(config.members)][x];
            cell = on_grid(rng.between(floor_units, top), step);
        }
        for (auto& row : rows) {
            bool positive = false;
            for (Degree v : row)
                positive = positive || v > Degree::zero();
            if (!positive)
                row[rng.below(n)] = on_grid(rng.between(1, top), step);
        }

        std::vector<NamedSet> members;
        for (std::size_t j = 0; j < config.members; ++j)
            members.push_back({"C" + std::to_string(c + 1) + "_" + std::to_string(j + 1),
                               FuzzySet(out.universe, std::move(rows[j]))});
        out.coverings.emplace_back("cov" + std::to_string(c + 1), out.universe, std::move(members), gamma);
    }

    for (std::size_t t = 0; t < config.targets; ++t) {
        std::vector<Degree> d(n);
        for (auto& v : d)
            v = random_degree(rng, step);
        out.targets.push_back({config.targets == 1 ? "X" : "X" + std::to_string(t + 1), FuzzySet(out.universe, std::move(d))});
    }
    return out;
}

GenConfig random_config(Rng& rng) {
    GenConfig c;
    c.objects = static_cast<std::size_t>(rng.between(1, 16));
    c.coverings = static_cast<std::size_t>(rng.between(1, 4));
    c.members = static_cast<std::size_t>(rng.between(1, 5));
    c.targets = 1;
    if (rng.chance(1, 8)) {
        c.decimals = 0;
        c.gammas = {Degree::one()};
        return c;
    }
    c.decimals = static_cast<int>(rng.between(1, 2));
    const std::int64_t step = c.decimals == 1 ? 100'000 : 10'000;
    c.gammas.clear();
    for (std::size_t i = 0; i < c.coverings; ++i)
        c.gammas.push_back(Degree(Decimal::from_micros(rng.between(1, Decimal::kScale / step) * step)));
    return c;
}

} // namespace dqr

#pragma once

#include "dqr/core_model.hpp"
#include "dqr/io.hpp"
#include "dqr/neighborhood.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace dqr;

std::string data_path(const std::string& name);

UniversePtr u8();
FuzzySet fs(const UniversePtr& u, const std::vector<std::string>& degrees);
ObjectSet objs(const UniversePtr& u, const std::vector<std::string>& names);
std::vector<std::string> names(const ObjectSet& s, const UniversePtr& u);

// The price covering (gamma 0.9), the second covering of the two-covering
// system (gamma 0.6) and the target X used throughout the worked examples.
FuzzyCovering price_covering(const UniversePtr& u);
FuzzyCovering second_covering(const UniversePtr& u);
FuzzySet target_x(const UniversePtr& u);

struct PaperData {
    UniversePtr u = u8();
    ApproximationSpace price{price_covering(u)};
    MultiGranulationSystem pair{{price_covering(u), second_covering(u)}};
    NeighborhoodTable t1 = build_table(price);
    std::vector<NeighborhoodTable> both = build_tables(pair);
    FuzzySet X = target_x(u);
};

} // namespace fixtures

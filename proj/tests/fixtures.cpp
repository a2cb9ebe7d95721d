#include "fixtures.hpp"

namespace fixtures {

std::string data_path(const std::string& name) {
    return std::string(DQR_DATA_DIR) + "/" + name;
}

UniversePtr u8() {
    return Universe::make({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"});
}

FuzzySet fs(const UniversePtr& u, const std::vector<std::string>& degrees) {
    return FuzzySet::parse(u, degrees);
}

ObjectSet objs(const UniversePtr& u, const std::vector<std::string>& names) {
    ObjectSet s(u->size());
    for (const auto& n : names)
        s.insert(u->index_of(n).value());
    return s;
}

std::vector<std::string> names(const ObjectSet& s, const UniversePtr& u) {
    std::vector<std::string> out;
    for (std::size_t i : s.members())
        out.push_back(u->name(i));
    return out;
}

FuzzyCovering price_covering(const UniversePtr& u) {
    return FuzzyCovering("price", u,
                         {{"high", fs(u, {"1", "0.7", "0", "0.9", "0.9", "0", "0.9", "0.8"})},
                          {"middle", fs(u, {"0.6", "0.9", "0.4", "0.4", "0.5", "0.7", "0.5", "1"})},
                          {"low", fs(u, {"0", "0.5", "0.9", "0", "0.5", "0.9", "0", "0.5"})}},
                         Degree::parse("0.9"));
}

FuzzyCovering second_covering(const UniversePtr& u) {
    return FuzzyCovering("c2", u,
                         {{"C21", fs(u, {"0.6", "0.4", "0.2", "0.4", "0.1", "0.6", "0.6", "0.5"})},
                          {"C22", fs(u, {"0.5", "0.3", "0.6", "0.6", "0.4", "0.5", "0.2", "0.6"})},
                          {"C23", fs(u, {"0.2", "0.6", "0.2", "0.5", "0.6", "0.3", "0", "0.3"})}},
                         Degree::parse("0.6"));
}

FuzzySet target_x(const UniversePtr& u) {
    return fs(u, {"0.6", "0.5", "0.7", "0.8", "0.5", "0.6", "0", "0.2"});
}

} // namespace fixtures

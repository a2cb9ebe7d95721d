#include "dqr/io.hpp"

#include "dqr/error.hpp"
#include "dqr/single_granulation.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace dqr {

using json = nlohmann::ordered_json;

namespace {

std::string at(const std::string& path) {
    return path.empty() ? "/" : path;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ParseError("at " + at(path) + ": " + what);
}

void require_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object())
        fail(path, "expected an object");
    for (const auto& [key, _] : j.items()) {
        bool known = false;
        for (const char* a : allowed)
            known = known || key == a;
        if (!known)
            fail(path, "unknown field \"" + key + "\"");
    }
}

const json& field(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end())
        fail(path, std::string("missing field \"") + key + "\"");
    return *it;
}

const json& array_field(const json& j, const char* key, const std::string& path) {
    const json& a = field(j, key, path);
    if (!a.is_array())
        fail(path + "/" + key, "expected an array");
    return a;
}

std::string name_of(const json& j, const std::string& path) {
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

Degree degree_of(const json& j, const std::string& path) {
    if (j.is_number())
        fail(path, "degree " + j.dump() + " is a JSON number; write degrees as strings, e.g. \"0.75\"");
    if (!j.is_string())
        fail(path, "expected a degree string");
    try {
        return Degree::parse(j.get<std::string>());
    } catch (const ParseError& e) {
        fail(path, e.what());
    }
}

FuzzySet fuzzy_set_of(const json& j, const UniversePtr& universe, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of degree strings");
    if (j.size() != universe->size())
        throw ValidationError("at " + path + ": " + std::to_string(j.size()) + " degrees, universe has " +
                              std::to_string(universe->size()) + " objects");
    std::vector<Degree> d;
    d.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        d.push_back(degree_of(j[i], path + "/" + std::to_string(i)));
    return FuzzySet(universe, std::move(d));
}

std::vector<NamedSet> named_sets_of(const json& a, const UniversePtr& universe, const std::string& path,
                                    const char* what) {
    std::vector<NamedSet> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        require_keys(a[i], p, {"name", "degrees"});
        std::string name = name_of(field(a[i], "name", p), p + "/name");
        if (!seen.insert(name).second)
            throw ValidationError("at " + p + ": duplicate " + what + " name \"" + name + "\"");
        out.push_back({std::move(name), fuzzy_set_of(field(a[i], "degrees", p), universe, p + "/degrees")});
    }
    return out;
}

json degrees_json(const FuzzySet& s) {
    json a = json::array();
    for (Degree d : s.degrees())
        a.push_back(d.to_string());
    return a;
}

json named_sets_json(const std::vector<NamedSet>& sets) {
    json a = json::array();
    for (const auto& m : sets)
        a.push_back(json{{"name", m.name}, {"degrees", degrees_json(m.set)}});
    return a;
}

json names_json(const ObjectSet& s, const Universe& u) {
    json a = json::array();
    for (std::size_t i : s.members())
        a.push_back(u.name(i));
    return a;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

} // namespace

FuzzyCovering CoveringBlock::covering() const {
    if (from_experts())
        return merge_expert_reports(name, experts, gamma);
    if (members.empty())
        throw ValidationError("covering \"" + name + "\" has no members");
    return FuzzyCovering(name, members.front().set.universe(), members, gamma);
}

std::vector<FuzzyCovering> SystemFile::coverings() const {
    std::vector<FuzzyCovering> out;
    for (const auto& b : blocks)
        out.push_back(b.covering());
    return out;
}

std::vector<ValidationReport> SystemFile::validate() const {
    std::vector<ValidationReport> out;
    for (const auto& c : coverings())
        out.push_back(validate_covering(c));
    return out;
}

MultiGranulationSystem SystemFile::system() const {
    std::string failures;
    for (const auto& r : validate())
        if (!r.ok())
            failures += (failures.empty() ? "" : "\n") + r.to_string();
    if (!failures.empty())
        throw ValidationError(failures);
    return MultiGranulationSystem(coverings());
}

const FuzzySet& SystemFile::target(const std::string& name) const {
    for (const auto& t : targets)
        if (t.name == name)
            return t.set;
    throw ParameterError("no target named \"" + name + "\"");
}

std::size_t SystemFile::covering_index(const std::string& name) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].name == name)
            return i;
    throw ParameterError("no covering named \"" + name + "\"");
}

SystemFile parse_system(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    require_keys(root, "", {"universe", "coverings", "targets"});

    SystemFile file;
    const json& u = array_field(root, "universe", "");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < u.size(); ++i)
        names.push_back(name_of(u[i], "/universe/" + std::to_string(i)));
    file.universe = Universe::make(std::move(names));

    const json& cs = array_field(root, "coverings", "");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const std::string p = "/coverings/" + std::to_string(i);
        require_keys(cs[i], p, {"name", "gamma", "members", "experts"});
        CoveringBlock b;
        b.name = name_of(field(cs[i], "name", p), p + "/name");
        if (!seen.insert(b.name).second)
            throw ValidationError("at " + p + ": duplicate covering name \"" + b.name + "\"");
        b.gamma = degree_of(field(cs[i], "gamma", p), p + "/gamma");
        const bool has_members = cs[i].contains("members");
        const bool has_experts = cs[i].contains("experts");
        if (has_members == has_experts)
            fail(p, "a covering needs exactly one of \"members\" or \"experts\"");
        if (has_members) {
            b.members = named_sets_of(array_field(cs[i], "members", p), file.universe, p + "/members", "member");
        } else {
            const json& ex = array_field(cs[i], "experts", p);
            if (ex.empty())
                throw ValidationError("at " + p + "/experts: no expert reports");
            for (std::size_t e = 0; e < ex.size(); ++e) {
                const std::string q = p + "/experts/" + std::to_string(e);
                require_keys(ex[e], q, {"expert", "members"});
                ExpertReport r;
                r.expert = name_of(field(ex[e], "expert", q), q + "/expert");
                r.values = named_sets_of(array_field(ex[e], "members", q), file.universe, q + "/members", "member");
                b.experts.push_back(std::move(r));
            }
        }
        file.blocks.push_back(std::move(b));
    }

    if (root.contains("targets")) {
        const json& ts = array_field(root, "targets", "");
        file.targets = named_sets_of(ts, file.universe, "/targets", "target");
    }
    return file;
}

SystemFile load_system(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParameterError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

std::string dump_system(const SystemFile& file) {
    json root;
    root["universe"] = file.universe->names();
    json cs = json::array();
    for (const auto& b : file.blocks) {
        json c;
        c["name"] = b.name;
        c["gamma"] = b.gamma.to_string();
        if (b.from_experts()) {
            json ex = json::array();
            for (const auto& r : b.experts)
                ex.push_back(json{{"expert", r.expert}, {"members", named_sets_json(r.values)}});
            c["experts"] = std::move(ex);
        } else {
            c["members"] = named_sets_json(b.members);
        }
        cs.push_back(std::move(c));
    }
    root["coverings"] = std::move(cs);
    root["targets"] = named_sets_json(file.targets);
    return root.dump(2) + "\n";
}

void save_system(const SystemFile& file, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParameterError("cannot write " + path.string());
    out << dump_system(file);
}

SystemFile system_file_of(UniversePtr universe, const std::vector<FuzzyCovering>& coverings,
                          std::vector<NamedSet> targets) {
    SystemFile file{std::move(universe), {}, std::move(targets)};
    for (const auto& c : coverings)
        file.blocks.push_back({c.name(), c.gamma(), c.members(), {}});
    return file;
}

OutputFormat parse_format(std::string_view text) {
    if (text == "json")
        return OutputFormat::Json;
    if (text == "csv")
        return OutputFormat::Csv;
    throw ParameterError("unknown format \"" + std::string(text) + "\" (expected json or csv)");
}

std::string render_result(const ApproximationResult& result, const ResultContext& ctx, OutputFormat format) {
    const Universe& u = *ctx.X->universe();
    const std::size_t n = u.size();

    std::vector<std::vector<ObjectMeasures>> measures;
    for (const auto& t : ctx.tables)
        measures.push_back(measure(t, *ctx.X));

    auto region_of = [&](std::size_t x) -> std::string {
        if (ctx.three) {
            if (ctx.three->pos.contains(x))
                return "POS";
            return ctx.three->bou.contains(x) ? "BOU" : "NEG";
        }
        if (ctx.five->pos.contains(x))
            return "POS";
        if (ctx.five->neg.contains(x))
            return "NEG";
        return ctx.five->lbo.contains(x) ? "LBO" : "UBO";
    };
    const bool regions = ctx.three.has_value() || ctx.five.has_value();

    if (format == OutputFormat::Csv) {
        std::vector<std::string> head{"object", "lower", "upper"};
        if (regions)
            head.push_back("region");
        for (const auto& t : ctx.tables)
            for (const char* col : {"P", "sigma", "overlap", "residual_mass", "complement_mass"})
                head.push_back(csv_field(t.covering + ":" + col));
        std::string out = join(head, ",") + "\n";
        for (std::size_t x = 0; x < n; ++x) {
            std::vector<std::string> row{csv_field(u.name(x)), result.lower.contains(x) ? "1" : "0",
                                         result.upper.contains(x) ? "1" : "0"};
            if (regions)
                row.push_back(region_of(x));
            for (const auto& ms : measures) {
                const auto& m = ms[x];
                row.push_back(m.probability().to_string());
                row.push_back(m.sigma.to_string());
                row.push_back(m.overlap.to_string());
                row.push_back(m.residual.to_string());
                row.push_back(m.complement_mass.to_string());
            }
            out += join(row, ",") + "\n";
        }
        return out;
    }

    json r;
    r["operator"] = op_name(result.op);
    json p;
    p["target"] = ctx.target;
    json covs = json::array();
    for (const auto& t : ctx.tables)
        covs.push_back(t.covering);
    p["coverings"] = std::move(covs);
    if (uses_thresholds(result.op)) {
        json alphas = json::array(), betas = json::array();
        for (const auto& t : result.params.thresholds) {
            alphas.push_back(t.alpha().to_string());
            betas.push_back(t.beta().to_string());
        }
        p["alphas"] = std::move(alphas);
        p["betas"] = std::move(betas);
    }
    if (uses_grades(result.op)) {
        json ks = json::array();
        for (const auto& k : result.params.grades)
            ks.push_back(k.k.to_string());
        p["ks"] = std::move(ks);
    }
    p["residual_mode"] = mode_name(result.params.mode);
    r["parameters"] = std::move(p);
    r["lower"] = names_json(result.lower, u);
    r["upper"] = names_json(result.upper, u);
    if (ctx.three)
        r["regions"] = json{{"POS", names_json(ctx.three->pos, u)},
                            {"BOU", names_json(ctx.three->bou, u)},
                            {"NEG", names_json(ctx.three->neg, u)}};
    if (ctx.five)
        r["regions"] = json{{"POS", names_json(ctx.five->pos, u)}, {"NEG", names_json(ctx.five->neg, u)},
                            {"LBO", names_json(ctx.five->lbo, u)}, {"UBO", names_json(ctx.five->ubo, u)},
                            {"BOU", names_json(ctx.five->bou, u)}};

    json diag = json::array();
    for (std::size_t i = 0; i < ctx.tables.size(); ++i) {
        json objs = json::array();
        for (std::size_t x = 0; x < n; ++x) {
            const auto& m = measures[i][x];
            objs.push_back(json{{"object", u.name(x)},
                                {"P", m.probability().to_string()},
                                {"sigma", m.sigma.to_string()},
                                {"overlap", m.overlap.to_string()},
                                {"residual_mass", m.residual.to_string()},
                                {"complement_mass", m.complement_mass.to_string()}});
        }
        diag.push_back(json{{"covering", ctx.tables[i].covering},
                            {"gamma", ctx.tables[i].gamma.to_string()},
                            {"objects", std::move(objs)}});
    }
    r["diagnostics"] = std::move(diag);
    return r.dump(2) + "\n";
}

std::string render_table(const FuzzyCovering& covering, const NeighborhoodTable& table, OutputFormat format) {
    const Universe& u = *table.universe;
    if (format == OutputFormat::Csv) {
        std::vector<std::string> head{"object", "qualifiers", "sigma"};
        for (const auto& name : u.names())
            head.push_back(csv_field(name));
        std::string out = join(head, ",") + "\n";
        for (std::size_t x = 0; x < table.size(); ++x) {
            std::vector<std::string> quals;
            for (std::size_t q : table.qualifiers[x])
                quals.push_back(covering.members()[q].name);
            std::vector<std::string> row{csv_field(u.name(x)), csv_field(join(quals, ";")), table.sigma[x].to_string()};
            for (Degree d : table.rows[x].degrees())
                row.push_back(d.to_string());
            out += join(row, ",") + "\n";
        }
        return out;
    }
    json objs = json::array();
    for (std::size_t x = 0; x < table.size(); ++x) {
        json quals = json::array();
        for (std::size_t q : table.qualifiers[x])
            quals.push_back(covering.members()[q].name);
        objs.push_back(json{{"object", u.name(x)},
                            {"qualifiers", std::move(quals)},
                            {"neighborhood", degrees_json(table.rows[x])},
                            {"sigma", table.sigma[x].to_string()}});
    }
    json r{{"covering", table.covering}, {"gamma", table.gamma.to_string()}, {"objects", std::move(objs)}};
    return r.dump(2) + "\n";
}

} // namespace dqr

#include "dqr/cli.hpp"

#include "dqr/differential.hpp"
#include "dqr/dispatch.hpp"
#include "dqr/error.hpp"
#include "dqr/generator.hpp"
#include "dqr/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>

namespace dqr {

namespace {

struct Options {
    std::string file;
    std::string op;
    std::string alpha, beta, k;
    std::string alphas, betas, ks;
    std::string target;
    std::string covering;
    std::string mode = "residual";
    std::string format = "json";
    std::string gamma_override;
    unsigned threads = 1;

    // check
    bool random = false;
    std::uint64_t seed = 0;
    std::size_t count = 10000;
    std::size_t rounds = 200;

    // gen
    std::size_t n = 8;
    std::size_t m = 1;
    std::size_t members = 3;
    std::string gammas = "0.5";
    int decimals = 1;
    std::size_t targets = 1;
    std::string out_path;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

Degree parameter_degree(const std::string& s, const char* what) {
    try {
        return Degree::parse(s);
    } catch (const ParseError& e) {
        throw ParameterError(std::string(what) + ": " + e.what());
    }
}

Decimal parameter_decimal(const std::string& s, const char* what) {
    try {
        return Decimal::parse(s);
    } catch (const ParseError& e) {
        throw ParameterError(std::string(what) + ": " + e.what());
    }
}

// Either a comma list of exactly `count` values or one value repeated.
std::vector<std::string> expand(const std::string& single, const std::string& list, std::size_t count,
                                const char* single_flag, const char* list_flag) {
    if (!single.empty() && !list.empty())
        throw ParameterError(std::string("give either ") + single_flag + " or " + list_flag + ", not both");
    if (!list.empty()) {
        auto parts = split(list, ',');
        if (parts.size() != count)
            throw ParameterError(std::string(list_flag) + " has " + std::to_string(parts.size()) + " values, " +
                                 std::to_string(count) + " coverings are in use");
        return parts;
    }
    if (single.empty())
        throw ParameterError(std::string("missing ") + single_flag + " (or " + list_flag + ")");
    return std::vector<std::string>(count, single);
}

OperatorParams build_params(const Options& o, OpId op, std::size_t count) {
    OperatorParams p;
    p.mode = parse_mode(o.mode);
    const bool has_t = !(o.alpha.empty() && o.beta.empty() && o.alphas.empty() && o.betas.empty());
    const bool has_k = !(o.k.empty() && o.ks.empty());
    if (uses_thresholds(op)) {
        const auto a = expand(o.alpha, o.alphas, count, "--alpha", "--alphas");
        const auto b = expand(o.beta, o.betas, count, "--beta", "--betas");
        for (std::size_t i = 0; i < count; ++i)
            p.thresholds.emplace_back(parameter_degree(a[i], "alpha"), parameter_degree(b[i], "beta"));
    } else if (has_t) {
        throw ParameterError(std::string(op_name(op)) + " takes no alpha/beta thresholds");
    }
    if (uses_grades(op)) {
        for (const auto& s : expand(o.k, o.ks, count, "--k", "--ks"))
            p.grades.push_back(Grade{parameter_decimal(s, "k")});
    } else if (has_k) {
        throw ParameterError(std::string(op_name(op)) + " takes no grade k");
    }
    return p;
}

void reject_gamma(const Options& o) {
    if (!o.gamma_override.empty())
        throw ParameterError("--gamma cannot be overridden; gamma is part of each covering in the system file");
}

std::string target_name(const SystemFile& file, const Options& o) {
    if (!o.target.empty()) {
        file.target(o.target);
        return o.target;
    }
    if (file.targets.size() != 1)
        throw ParameterError("the file has " + std::to_string(file.targets.size()) + " targets; pick one with --target");
    return file.targets.front().name;
}

std::size_t covering_choice(const SystemFile& file, const Options& o) {
    if (!o.covering.empty())
        return file.covering_index(o.covering);
    if (file.blocks.size() != 1)
        throw ParameterError("the file has " + std::to_string(file.blocks.size()) +
                             " coverings; pick one with --covering");
    return 0;
}

struct Loaded {
    SystemFile file;
    std::optional<MultiGranulationSystem> system;
    std::vector<NeighborhoodTable> tables;
};

Loaded load_all(const Options& o) {
    Loaded l{load_system(o.file), std::nullopt, {}};
    l.system.emplace(l.file.system());
    l.tables = build_tables(*l.system, std::max(1u, o.threads));
    return l;
}

int cmd_validate(const Options& o, std::ostream& out) {
    const auto file = load_system(o.file);
    bool ok = true;
    for (const auto& r : file.validate()) {
        out << r.to_string() << "\n";
        ok = ok && r.ok();
    }
    for (const auto& t : file.targets)
        out << "target \"" << t.name << "\": ok\n";
    return ok ? kExitOk : kExitValidation;
}

int cmd_neigh(const Options& o, std::ostream& out) {
    reject_gamma(o);
    const auto l = load_all(o);
    const auto format = parse_format(o.format);
    if (o.covering.empty() && format == OutputFormat::Json && l.tables.size() > 1) {
        for (std::size_t i = 0; i < l.tables.size(); ++i)
            out << render_table(l.system->coverings()[i], l.tables[i], format);
        return kExitOk;
    }
    const std::size_t i = o.covering.empty() ? 0 : l.file.covering_index(o.covering);
    out << render_table(l.system->coverings()[i], l.tables[i], format);
    return kExitOk;
}

enum class Family { Any, Regions, Multi };

int cmd_approx(const Options& o, std::ostream& out, Family family) {
    reject_gamma(o);
    const OpId op = parse_op_id(o.op);
    if (family == Family::Regions && op != OpId::Prob && op != OpId::Grade)
        throw ParameterError("regions are defined for prob and grade only, not " + std::string(op_name(op)));
    if (family == Family::Multi && !is_multi_granulation(op))
        throw ParameterError("mg needs a multi-granulation operator, not " + std::string(op_name(op)));
    const auto format = parse_format(o.format);
    const auto l = load_all(o);
    const std::string target = target_name(l.file, o);
    const FuzzySet& X = l.file.target(target);

    std::span<const NeighborhoodTable> tables(l.tables);
    if (is_multi_granulation(op)) {
        if (!o.covering.empty())
            throw ParameterError("multi-granulation operators use every covering; drop --covering");
    } else {
        tables = tables.subspan(covering_choice(l.file, o), 1);
    }
    const auto params = build_params(o, op, tables.size());
    const auto result = evaluate(op, tables, X, params);

    ResultContext ctx{target, tables, &X, std::nullopt, std::nullopt};
    if (family == Family::Regions) {
        if (op == OpId::Prob)
            ctx.three = prob_regions(tables[0], X, params.thresholds[0]);
        else
            ctx.five = grade_regions(tables[0], X, params.grades[0], params.mode);
    }
    out << render_result(result, ctx, format);
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
    DifferentialReport report;
    if (o.random) {
        if (!o.file.empty())
            throw ParameterError("give a system file or --random, not both");
        report = run_random_differential(o.seed, o.count);
    } else {
        if (o.file.empty())
            throw ParameterError("check needs a system file or --random");
        const auto file = load_system(o.file);
        const auto system = file.system();
        if (file.targets.empty())
            throw ParameterError("the file has no targets to check against");
        report = run_system_differential(system, file.targets, o.seed, o.rounds);
    }
    out << report.summary() << "\n";
    const std::size_t shown = std::min<std::size_t>(report.mismatches.size(), 20);
    for (std::size_t i = 0; i < shown; ++i)
        out << "  " << report.mismatches[i] << "\n";
    out << (report.ok() ? "PASS" : "FAIL") << "\n";
    return report.ok() ? kExitOk : kExitDifferential;
}

int cmd_gen(const Options& o, std::ostream& out) {
    GenConfig c;
    c.objects = o.n;
    c.coverings = o.m;
    c.members = o.members;
    c.decimals = o.decimals;
    c.targets = o.targets;
    c.gammas.clear();
    for (const auto& g : split(o.gammas, ','))
        c.gammas.push_back(parameter_degree(g, "gamma"));
    const auto gen = generate_system(c, o.seed);
    const auto file = system_file_of(gen.universe, gen.coverings, gen.targets);
    file.system();
    if (o.out_path.empty()) {
        out << dump_system(file);
    } else {
        save_system(file, o.out_path);
    }
    return kExitOk;
}

// start:stop:step over exact decimals, or a single value.
std::vector<Decimal> parse_grid(const std::string& text, const char* what) {
    const auto parts = split(text, ':');
    if (parts.size() == 1)
        return {parameter_decimal(parts[0], what)};
    if (parts.size() != 3)
        throw ParameterError(std::string(what) + " grid must be start:stop:step, got \"" + text + "\"");
    const Decimal start = parameter_decimal(parts[0], what);
    const Decimal stop = parameter_decimal(parts[1], what);
    const Decimal step = parameter_decimal(parts[2], what);
    if (step <= Decimal{})
        throw ParameterError(std::string(what) + " grid step must be positive");
    if (start > stop)
        throw ParameterError(std::string(what) + " grid start exceeds stop");
    if ((stop - start).micros() / step.micros() > 100000)
        throw ParameterError(std::string(what) + " grid has more than 100000 points");
    std::vector<Decimal> out;
    for (Decimal v = start; v <= stop; v += step)
        out.push_back(v);
    return out;
}

std::string names_of(const ObjectSet& s, const Universe& u) {
    std::string out;
    for (std::size_t i : s.members())
        out += (out.empty() ? "" : " ") + u.name(i);
    return out;
}

int cmd_sweep(const Options& o, std::ostream& out) {
    reject_gamma(o);
    const OpId op = parse_op_id(o.op);
    if (!o.alphas.empty() || !o.betas.empty() || !o.ks.empty())
        throw ParameterError("sweep takes grids through --alpha, --beta and --k");
    const auto l = load_all(o);
    const std::string target = target_name(l.file, o);
    const FuzzySet& X = l.file.target(target);
    std::span<const NeighborhoodTable> tables(l.tables);
    if (!is_multi_granulation(op))
        tables = tables.subspan(covering_choice(l.file, o), 1);
    const std::size_t count = tables.size();
    const ResidualMode mode = parse_mode(o.mode);

    const bool t = uses_thresholds(op);
    const bool g = uses_grades(op);
    if (t && (o.alpha.empty() || o.beta.empty()))
        throw ParameterError("sweep of " + std::string(op_name(op)) + " needs --alpha and --beta grids");
    if (!t && !(o.alpha.empty() && o.beta.empty()))
        throw ParameterError(std::string(op_name(op)) + " takes no alpha/beta thresholds");
    if (g && o.k.empty())
        throw ParameterError("sweep of " + std::string(op_name(op)) + " needs a --k grid");
    if (!g && !o.k.empty())
        throw ParameterError(std::string(op_name(op)) + " takes no grade k");

    std::vector<Degree> alphas{Degree::zero()}, betas{Degree::zero()};
    if (t) {
        alphas.clear();
        betas.clear();
        for (Decimal v : parse_grid(o.alpha, "alpha"))
            alphas.push_back(Degree(v));
        for (Decimal v : parse_grid(o.beta, "beta"))
            betas.push_back(Degree(v));
    }
    const std::vector<Decimal> ks = g ? parse_grid(o.k, "k") : std::vector<Decimal>{Decimal{}};

    const Universe& u = *X.universe();
    std::vector<std::string> head;
    if (t) {
        head.push_back("alpha");
        head.push_back("beta");
    }
    if (g)
        head.push_back("k");
    for (const char* c : {"lower_count", "upper_count", "lower", "upper"})
        head.push_back(c);
    for (std::size_t i = 0; i < head.size(); ++i)
        out << (i ? "," : "") << head[i];
    out << "\n";

    for (Degree a : alphas)
        for (Degree b : betas) {
            if (t && b > a)
                continue;
            for (Decimal k : ks) {
                OperatorParams p;
                p.mode = mode;
                if (t)
                    p.thresholds.assign(count, ThresholdPair(a, b));
                if (g)
                    p.grades.assign(count, Grade{k});
                const auto r = evaluate(op, tables, X, p);
                if (t)
                    out << a.to_string() << "," << b.to_string() << ",";
                if (g)
                    out << k.to_string() << ",";
                out << r.lower.count() << "," << r.upper.count() << "," << names_of(r.lower, u) << ","
                    << names_of(r.upper, u) << "\n";
            }
        }
    return kExitOk;
}

void add_params(CLI::App* sub, Options& o) {
    sub->add_option("--alpha", o.alpha, "lower threshold alpha (every covering)");
    sub->add_option("--beta", o.beta, "upper threshold beta (every covering)");
    sub->add_option("--alphas", o.alphas, "comma list, one alpha per covering");
    sub->add_option("--betas", o.betas, "comma list, one beta per covering");
    sub->add_option("--k", o.k, "grade k (every covering)");
    sub->add_option("--ks", o.ks, "comma list, one k per covering");
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("file", o.file, "system file (JSON)")->required();
    sub->add_option("--target", o.target, "target fuzzy set name");
    sub->add_option("--covering", o.covering, "covering name for single-covering operators");
    sub->add_option("--residual-mode", o.mode, "residual | complement")->check(CLI::IsMember({"residual", "complement"}));
    sub->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", o.threads, "worker threads for neighborhood tables");
    sub->add_option("--gamma", o.gamma_override, "rejected: gamma is read from the file");
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"dqr: double-quantitative rough approximations over fuzzy gamma-coverings"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "check every covering of a system file");
    validate->add_option("file", o.file, "system file (JSON)")->required();

    auto* neigh = app.add_subcommand("neigh", "dump fuzzy gamma-neighborhood tables");
    add_common(neigh, o);

    auto* approx = app.add_subcommand("approx", "lower and upper approximation of a target");
    add_common(approx, o);
    approx->add_option("--op", o.op, "operator id")->required();
    add_params(approx, o);

    auto* regions = app.add_subcommand("regions", "three-way (prob) or five-way (grade) regions");
    add_common(regions, o);
    regions->add_option("--op", o.op, "prob | grade")->required();
    add_params(regions, o);

    auto* mg = app.add_subcommand("mg", "multi-granulation approximation");
    add_common(mg, o);
    mg->add_option("--op", o.op, "mg-prob1 .. mg-dq2 or -all/-any aliases")->required();
    add_params(mg, o);

    auto* check = app.add_subcommand("check", "differential check against the brute-force oracle");
    check->add_option("file", o.file, "system file (JSON)");
    check->add_flag("--random", o.random, "use seeded random instances instead of a file");
    check->add_option("--seed", o.seed, "random seed");
    check->add_option("--count", o.count, "random instances");
    check->add_option("--rounds", o.rounds, "parameter draws per target for a file");

    auto* gen = app.add_subcommand("gen", "generate a random valid system file");
    gen->add_option("--n", o.n, "objects");
    gen->add_option("--m", o.m, "coverings");
    gen->add_option("--members", o.members, "members per covering");
    gen->add_option("--gamma", o.gammas, "gamma, or comma list with one per covering");
    gen->add_option("--seed", o.seed, "random seed");
    gen->add_option("--decimals", o.decimals, "degree grid 10^-decimals (0 = crisp)");
    gen->add_option("--targets", o.targets, "number of random targets");
    gen->add_option("--out", o.out_path, "write to this path instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "evaluate an operator over a parameter grid (CSV)");
    add_common(sweep, o);
    sweep->add_option("--op", o.op, "operator id")->required();
    add_params(sweep, o);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitParameter;
    }

    try {
        if (validate->parsed())
            return cmd_validate(o, out);
        if (neigh->parsed())
            return cmd_neigh(o, out);
        if (approx->parsed())
            return cmd_approx(o, out, Family::Any);
        if (regions->parsed())
            return cmd_approx(o, out, Family::Regions);
        if (mg->parsed())
            return cmd_approx(o, out, Family::Multi);
        if (check->parsed())
            return cmd_check(o, out);
        if (gen->parsed())
            return cmd_gen(o, out);
        if (sweep->parsed())
            return cmd_sweep(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParameterError& e) {
        err << "parameter error: " << e.what() << "\n";
        return kExitParameter;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitParameter;
}

} // namespace dqr

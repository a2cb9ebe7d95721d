#pragma once

#include "dqr/core_model.hpp"
#include "dqr/neighborhood.hpp"
#include "dqr/operator_id.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dqr {

/// One covering block as written in a system file: either explicit members or
/// expert reports that are unioned into members on load.
struct CoveringBlock {
    std::string name;
    Degree gamma;
    std::vector<NamedSet> members;
    std::vector<ExpertReport> experts;

    bool from_experts() const { return !experts.empty(); }
    // The covering this block denotes; expert reports are merged first.
    // Not validated.
    FuzzyCovering covering() const;
};

/// In-memory image of a system file. Keeps the source form of every block so
/// that saving a loaded file writes it back unchanged.
struct SystemFile {
    UniversePtr universe;
    std::vector<CoveringBlock> blocks;
    std::vector<NamedSet> targets;

    std::vector<FuzzyCovering> coverings() const;
    std::vector<ValidationReport> validate() const;
    // Throws ValidationError with every failing report.
    MultiGranulationSystem system() const;

    // Throws ParameterError for an unknown name.
    const FuzzySet& target(const std::string& name) const;
    std::size_t covering_index(const std::string& name) const;
};

// Parse errors carry the JSON pointer of the offending value and, for syntax
// errors, the byte offset. Degrees must be JSON strings; numbers are rejected.
SystemFile parse_system(const std::string& text);
SystemFile load_system(const std::filesystem::path& path);

// Canonical form: two-space indentation, keys in schema order, degrees in
// shortest form, trailing newline.
std::string dump_system(const SystemFile& file);
void save_system(const SystemFile& file, const std::filesystem::path& path);

SystemFile system_file_of(UniversePtr universe, const std::vector<FuzzyCovering>& coverings,
                          std::vector<NamedSet> targets);

enum class OutputFormat { Json, Csv };

OutputFormat parse_format(std::string_view text);

/// Everything a result file reports besides the operator output itself.
struct ResultContext {
    std::string target;
    std::span<const NeighborhoodTable> tables;
    const FuzzySet* X = nullptr;
    std::optional<ThreeRegions> three;
    std::optional<FiveRegions> five;
};

std::string render_result(const ApproximationResult& result, const ResultContext& ctx, OutputFormat format);

std::string render_table(const FuzzyCovering& covering, const NeighborhoodTable& table, OutputFormat format);

} // namespace dqr

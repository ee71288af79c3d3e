#pragma once

// Rendering of classifications, sweeps and diagnostics as JSON or text.
// JSON output uses sorted keys, two-space indentation and a trailing LF;
// nothing in it depends on time, paths or the environment.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "anonlevel/classifier.hpp"
#include "anonlevel/diagnostic.hpp"
#include "anonlevel/params.hpp"
#include "anonlevel/taxonomy.hpp"

namespace anonlevel {

inline constexpr const char* kReportSchemaVersion = "1";

struct Report {
    std::string model_name;
    std::optional<AnalysisParams> params;
    std::optional<Classification> classification;
    std::vector<Diagnostic> diagnostics;
};

nlohmann::json to_json(const Diagnostic& d);
nlohmann::json to_json(const std::vector<Diagnostic>& diagnostics);
nlohmann::json to_json(const TaxonomyMap& map);
nlohmann::json to_json(const Classification& c);
nlohmann::json to_json(const Report& r);

/// Inverse of to_json(Classification). Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
Classification classification_from_json(const nlohmann::json& j);
Diagnostic diagnostic_from_json(const nlohmann::json& j);

std::string dump(const nlohmann::json& j);

/// `file:line:col: severity[CODE]: message`, position omitted when unknown.
std::string format_diagnostic(const Diagnostic& d, const std::string& source);

std::string render_text(const Report& r, bool color);
std::string render_json(const Report& r);

std::string render_sweep_text(const std::string& model_name, const std::string& observee, const SweepResult& s,
                              bool color);
std::string render_sweep_json(const std::string& model_name, const std::string& observee, const SweepResult& s);

/// One correspondence row, cells separated by " / "; absent cells print as "X".
std::string render_map_text(const Level& level, Variant variant, const TaxonomyMap& map);
std::string render_map_json(const Level& level, Variant variant, const TaxonomyMap& map);

}  // namespace anonlevel

#include "anonlevel/report.hpp"

#include <sstream>
#include <stdexcept>

namespace anonlevel {

using nlohmann::json;

namespace {

template <class E>
E enum_from_json(const json& j) {
    const auto value = from_string<E>(j.get<std::string>());
    if (!value) throw std::invalid_argument("unknown value '" + j.get<std::string>() + "'");
    return *value;
}

json entry_json(const std::optional<TaxonomyEntry>& e) {
    if (!e) return nullptr;
    return json{{"parenthesised", e->parenthesised}, {"term", e->term}};
}

std::optional<TaxonomyEntry> entry_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return TaxonomyEntry{j.at("term").get<std::string>(), j.at("parenthesised").get<bool>()};
}

std::string cell(const std::optional<TaxonomyEntry>& e) { return e ? e->display() : "X"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

struct Style {
    bool on;
    std::string bold(const std::string& s) const { return on ? "\x1b[1m" + s + "\x1b[0m" : s; }
    std::string red(const std::string& s) const { return on ? "\x1b[31m" + s + "\x1b[0m" : s; }
    std::string yellow(const std::string& s) const { return on ? "\x1b[33m" + s + "\x1b[0m" : s; }
};

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

}  // namespace

json to_json(const Diagnostic& d) {
    json loc = nullptr;
    if (d.location) loc = {{"column", d.location->column}, {"length", d.location->length}, {"line", d.location->line}};
    return {{"code", d.code}, {"location", loc}, {"message", d.message}, {"severity", to_string(d.severity)}};
}

json to_json(const std::vector<Diagnostic>& diagnostics) {
    json out = json::array();
    for (const auto& d : diagnostics) out.push_back(to_json(d));
    return out;
}

json to_json(const TaxonomyMap& map) {
    return {{"flinn_maurer", entry_json(map.flinn_maurer)},
            {"kohntopp_pfitzmann", entry_json(map.kohntopp_pfitzmann)},
            {"seys", entry_json(map.seys)}};
}

json to_json(const Classification& c) {
    json sources = json::array();
    for (auto s : c.recognisability.sources) sources.push_back(to_string(s));
    return {
        {"accountability", to_string(c.accountability.kind)},
        {"correspondences", to_json(c.correspondences)},
        {"group_anonymity", c.group_anonymity},
        {"ioi_traceable", c.ioi_traceable},
        {"level", {{"abbr", c.level.abbr}, {"degree", c.level.degree}, {"name", c.level.name}}},
        {"linkability", to_string(c.linkability.conditionality)},
        {"publicity", {{"exception", c.publicity.exception_applied}, {"satisfied", c.publicity.satisfied}}},
        {"recognisability",
         {{"conditionality", to_string(c.recognisability.conditionality)}, {"sources", sources}}},
        {"scope_of_trust", c.scope.members},
        {"variant", to_string(c.variant)},
        {"warnings", to_json(c.warnings)},
    };
}

json to_json(const Report& r) {
    json params = nullptr;
    if (r.params) params = {{"observee", r.params->observee}, {"trusted", r.params->trusted}};
    json classification = nullptr;
    if (r.classification) classification = to_json(*r.classification);
    return {{"classification", classification},
            {"diagnostics", to_json(r.diagnostics)},
            {"model", r.model_name},
            {"params", params},
            {"schema_version", kReportSchemaVersion}};
}

Diagnostic diagnostic_from_json(const json& j) {
    Diagnostic d;
    d.severity = enum_from_json<Severity>(j.at("severity"));
    d.code = j.at("code").get<std::string>();
    d.message = j.at("message").get<std::string>();
    const auto& loc = j.at("location");
    if (!loc.is_null()) {
        d.location = SourceSpan{loc.at("line").get<int>(), loc.at("column").get<int>(), loc.at("length").get<int>()};
    }
    return d;
}

Classification classification_from_json(const json& j) {
    Classification c;
    const auto& level = j.at("level");
    const int degree = level.at("degree").get<int>();
    if (degree < 0 || degree > 4) throw std::invalid_argument("degree out of range");
    c.level = Level::from_degree(degree);
    if (level.at("abbr").get<std::string>() != c.level.abbr || level.at("name").get<std::string>() != c.level.name) {
        throw std::invalid_argument("level fields disagree");
    }
    c.variant = enum_from_json<Variant>(j.at("variant"));
    c.scope.members = j.at("scope_of_trust").get<std::set<std::string>>();
    const auto& rec = j.at("recognisability");
    c.recognisability.conditionality = enum_from_json<Conditionality>(rec.at("conditionality"));
    for (const auto& s : rec.at("sources")) c.recognisability.sources.push_back(enum_from_json<RecognitionSource>(s));
    c.linkability.conditionality = enum_from_json<Conditionality>(j.at("linkability"));
    c.accountability.kind = enum_from_json<AccountabilityKind>(j.at("accountability"));
    c.ioi_traceable = j.at("ioi_traceable").get<bool>();
    c.publicity.satisfied = j.at("publicity").at("satisfied").get<bool>();
    c.publicity.exception_applied = j.at("publicity").at("exception").get<bool>();
    c.group_anonymity = j.at("group_anonymity").get<bool>();
    const auto& corr = j.at("correspondences");
    c.correspondences.flinn_maurer = entry_from_json(corr.at("flinn_maurer"));
    c.correspondences.kohntopp_pfitzmann = entry_from_json(corr.at("kohntopp_pfitzmann"));
    c.correspondences.seys = entry_from_json(corr.at("seys"));
    for (const auto& w : j.at("warnings")) c.warnings.push_back(diagnostic_from_json(w));
    return c;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_diagnostic(const Diagnostic& d, const std::string& source) {
    std::string out = source;
    if (d.location) out += ":" + std::to_string(d.location->line) + ":" + std::to_string(d.location->column);
    if (!out.empty()) out += ": ";
    return out + std::string(to_string(d.severity)) + "[" + d.code + "]: " + d.message;
}

std::string render_json(const Report& r) { return dump(to_json(r)); }

std::string render_text(const Report& r, bool color) {
    const Style style{color};
    std::ostringstream out;
    const std::size_t w = 30;
    out << style.bold("service " + r.model_name) << "\n";
    if (r.params) {
        out << pad("observee", w) << r.params->observee << "\n";
        out << pad("trusted set", w)
            << join(std::vector<std::string>(r.params->trusted.begin(), r.params->trusted.end()), ", ") << "\n";
    }
    if (r.classification) {
        const auto& c = *r.classification;
        std::vector<std::string> sources;
        for (auto s : c.recognisability.sources) sources.emplace_back(to_string(s));
        std::string publicity = c.publicity.satisfied ? "satisfied" : "violated";
        if (c.publicity.exception_applied) publicity += " (by exception)";

        out << pad("LEVEL", w) << style.bold(std::to_string(c.level.degree) + " " + std::string(c.level.abbr)) << "\n";
        out << pad("TYPE OF ANONYMITY", w) << c.level.name << "\n";
        out << pad("VARIANT", w) << to_string(c.variant) << "\n";
        out << pad("SCOPE OF TRUST", w)
            << (c.scope.members.empty()
                    ? std::string("void")
                    : join(std::vector<std::string>(c.scope.members.begin(), c.scope.members.end()), ", "))
            << "\n";
        out << pad("RECOGNISABILITY TYPE", w) << to_string(c.recognisability.conditionality) << "\n";
        out << pad("RECOGNISABILITY SOURCE", w) << (sources.empty() ? "none" : join(sources, " and ")) << "\n";
        out << pad("TYPE OF LINKABILITY", w) << to_string(c.linkability.conditionality) << "\n";
        out << pad("TYPE OF LEGAL ACCOUNTABILITY", w) << to_string(c.accountability.kind) << "\n";
        out << pad("IOI TRACEABLE", w) << (c.ioi_traceable ? "yes" : "no") << "\n";
        out << pad("PUBLICITY CONSTRAINT", w) << publicity << "\n";
        out << pad("GROUP ANONYMITY", w) << (c.group_anonymity ? "yes" : "no") << "\n";
        out << pad("FLINN AND MAURER", w) << cell(c.correspondences.flinn_maurer) << "\n";
        out << pad("KÖHNTOPP AND PFITZMANN", w + 1) << cell(c.correspondences.kohntopp_pfitzmann) << "\n";
        out << pad("SEYS ET AL.", w) << cell(c.correspondences.seys) << "\n";
        for (const auto& d : c.warnings) out << style.yellow(format_diagnostic(d, "")) << "\n";
    }
    for (const auto& d : r.diagnostics) {
        const auto line = format_diagnostic(d, "");
        out << (d.severity == Severity::error ? style.red(line) : style.yellow(line)) << "\n";
    }
    return out.str();
}

std::string render_sweep_text(const std::string& model_name, const std::string& observee, const SweepResult& s,
                              bool color) {
    const Style style{color};
    std::ostringstream out;
    out << style.bold("service " + model_name) << "\n";
    out << "observee " << observee << "; optional participants: "
        << (s.optional_participants.empty() ? std::string("none") : join(s.optional_participants, ", ")) << "\n";
    if (!s.entries.empty()) {
        std::size_t width = std::string("ALSO TRUSTED").size();
        std::vector<std::string> labels;
        for (const auto& e : s.entries) {
            labels.push_back(e.trusted.empty()
                                 ? std::string("-")
                                 : join(std::vector<std::string>(e.trusted.begin(), e.trusted.end()), ", "));
            width = std::max(width, labels.back().size());
        }
        out << pad("ALSO TRUSTED", width + 2) << "DEG  ABBR  VARIANT\n";
        for (std::size_t i = 0; i < s.entries.size(); ++i) {
            const auto& c = s.entries[i].result.classification;
            out << pad(labels[i], width + 2) << pad(std::to_string(c.level.degree), 5) << pad(std::string(c.level.abbr), 6)
                << to_string(c.variant);
            if (!s.entries[i].result.ok()) out << "  " << style.red(join(codes_of(s.entries[i].result.diagnostics), ","));
            out << "\n";
        }
    }
    for (const auto& d : s.diagnostics) out << style.red(format_diagnostic(d, "")) << "\n";
    return out.str();
}

std::string render_sweep_json(const std::string& model_name, const std::string& observee, const SweepResult& s) {
    json entries = json::array();
    for (const auto& e : s.entries) {
        entries.push_back({{"classification", to_json(e.result.classification)},
                           {"diagnostics", to_json(e.result.diagnostics)},
                           {"trusted", e.trusted}});
    }
    return dump({{"diagnostics", to_json(s.diagnostics)},
                 {"entries", entries},
                 {"model", model_name},
                 {"observee", observee},
                 {"optional_participants", s.optional_participants},
                 {"schema_version", kReportSchemaVersion}});
}

std::string render_map_text(const Level&, Variant, const TaxonomyMap& map) {
    return cell(map.flinn_maurer) + " / " + cell(map.kohntopp_pfitzmann) + " / " + cell(map.seys) + "\n";
}

std::string render_map_json(const Level& level, Variant variant, const TaxonomyMap& map) {
    return dump({{"correspondences", to_json(map)},
                 {"level", {{"abbr", level.abbr}, {"degree", level.degree}, {"name", level.name}}},
                 {"schema_version", kReportSchemaVersion},
                 {"variant", to_string(variant)}});
}

}  // namespace anonlevel

#include "anonlevel/taxonomy.hpp"

#include <array>

namespace anonlevel {
namespace {

struct Row {
    int degree;
    Variant variant;
    const char* flinn_maurer;  // nullptr: no counterpart
    const char* kohntopp_pfitzmann;
    bool kp_parenthesised;
    const char* seys;
};

// Cells spanning several rows are repeated in each row they cover.
constexpr std::array<Row, 8> kRows{{
    {0, Variant::none, "usual identification", "public pseudonym", false, "no anonymity or semi-anonymity"},
    {1, Variant::none, "latent identification", "initially non-public pseudonyms", false,
     "no anonymity or semi-anonymity"},
    {2, Variant::linkable, "latent identification", "initially non-public transaction pseudonyms", false,
     "conditional persistent anonymity"},
    {2, Variant::unlinkable, "latent identification", "initially unlinkable pseudonyms", false,
     "conditional one-time anonymity"},
    {3, Variant::linkable, nullptr, "initially unlinkable transaction pseudonyms", true, nullptr},
    {3, Variant::unlinkable, "latent identification", "initially unlinkable pseudonyms", false,
     "conditional one-time anonymity"},
    {4, Variant::linkable, "pen-name or anonymous identification", "initially unlinkable transaction pseudonyms",
     true, "unconditional persistent anonymity"},
    {4, Variant::unlinkable, "no identification", "initially unlinkable pseudonyms", false,
     "unconditional one-time anonymity"},
}};

std::optional<TaxonomyEntry> entry(const char* term, bool parenthesised = false) {
    if (term == nullptr) return std::nullopt;
    return TaxonomyEntry{term, parenthesised};
}

}  // namespace

std::optional<TaxonomyMap> map_taxonomies(const Level& level, Variant variant) {
    for (const auto& row : kRows) {
        if (row.degree == level.degree && row.variant == variant) {
            return TaxonomyMap{entry(row.flinn_maurer), entry(row.kohntopp_pfitzmann, row.kp_parenthesised),
                               entry(row.seys)};
        }
    }
    return std::nullopt;
}

Diagnostic invalid_combination(const Level& level, Variant variant) {
    const std::string expected = level.degree <= 1 ? "no variant" : "linkable or unlinkable";
    return make_error("CLS-003", std::string(level.abbr) + " cannot be combined with variant '" +
                                     std::string(to_string(variant)) + "' (expected " + expected + ")");
}

}  // namespace anonlevel

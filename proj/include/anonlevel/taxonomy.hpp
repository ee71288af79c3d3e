#pragma once

#include <optional>
#include <string>

#include "anonlevel/diagnostic.hpp"
#include "anonlevel/level.hpp"

namespace anonlevel {

/// One cell of the correspondence table.
struct TaxonomyEntry {
    std::string term;
    /// The level can do without this kind of pseudonym, though it does not
    /// exclude it. Rendered in parentheses.
    bool parenthesised = false;

    std::string display() const { return parenthesised ? "(" + term + ")" : term; }

    friend bool operator==(const TaxonomyEntry&, const TaxonomyEntry&) = default;
};

/// Corresponding categories in three earlier taxonomies. An absent field
/// means that taxonomy has no counterpart for the level.
struct TaxonomyMap {
    std::optional<TaxonomyEntry> flinn_maurer;
    std::optional<TaxonomyEntry> kohntopp_pfitzmann;
    std::optional<TaxonomyEntry> seys;

    friend bool operator==(const TaxonomyMap&, const TaxonomyMap&) = default;
};

/// Valid combinations are levels 0-1 with `Variant::none` and levels 2-4
/// with `linkable` or `unlinkable`; anything else yields nullopt.
std::optional<TaxonomyMap> map_taxonomies(const Level& level, Variant variant);

/// CLS-003 for an invalid (level, variant) pair.
Diagnostic invalid_combination(const Level& level, Variant variant);

}  // namespace anonlevel

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "anonlevel/enum_names.hpp"

namespace anonlevel {

/// One of the five trust-based anonymity levels, ordered by a shrinking
/// scope of trust.
struct Level {
    int degree = 4;
    std::string_view abbr = "UA";
    std::string_view name = "unconditional";

    static const Level& void_anonymity();
    static const Level& apparent();
    static const Level& revocable();
    static const Level& forfeitable();
    static const Level& unconditional();

    static const Level& from_degree(int degree);
    /// Accepts a degree ("2"), an abbreviation ("RA", any case) or a name
    /// ("revocable").
    static std::optional<Level> parse(std::string_view text);

    friend bool operator==(const Level& a, const Level& b) { return a.degree == b.degree; }
    friend auto operator<=>(const Level& a, const Level& b) { return a.degree <=> b.degree; }
};

inline constexpr std::array<Level, 5> kLevels{{
    {0, "VA", "void"},
    {1, "AA", "apparent"},
    {2, "RA", "revocable"},
    {3, "FA", "forfeitable"},
    {4, "UA", "unconditional"},
}};

enum class Variant { linkable, unlinkable, none };

template <>
struct EnumNames<Variant> {
    static constexpr std::array<std::pair<Variant, std::string_view>, 3> names{{
        {Variant::linkable, "linkable"},
        {Variant::unlinkable, "unlinkable"},
        {Variant::none, "none"},
    }};
};

}  // namespace anonlevel

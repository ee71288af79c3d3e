#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

namespace anonlevel {

/// Maps each enumerator to its stable spelling. Specialise with a
/// `static constexpr std::array<std::pair<E, std::string_view>, N> names`.
template <class E>
struct EnumNames;

template <class E>
constexpr std::string_view to_string(E value) {
    for (const auto& [e, name] : EnumNames<E>::names) {
        if (e == value) return name;
    }
    return "?";
}

template <class E>
constexpr std::optional<E> from_string(std::string_view text) {
    for (const auto& [e, name] : EnumNames<E>::names) {
        if (name == text) return e;
    }
    return std::nullopt;
}

template <class E>
constexpr auto all_values() {
    std::array<E, EnumNames<E>::names.size()> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = EnumNames<E>::names[i].first;
    return out;
}

}  // namespace anonlevel

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anonlevel/enum_names.hpp"

namespace anonlevel {

/// 1-based position of a token in a source file. Columns count bytes.
struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { error, warning };

template <>
struct EnumNames<Severity> {
    static constexpr std::array<std::pair<Severity, std::string_view>, 2> names{{
        {Severity::error, "error"},
        {Severity::warning, "warning"},
    }};
};

/// A finding from parsing, validation or classification. Codes are stable
/// (`DSL-0xx`, `MOD-0xx`, `IMP-0xx`, `PAR-0xx`, `CLS-0xx`, `GS-0xx`, `TBL-0xx`).
struct Diagnostic {
    Severity severity = Severity::error;
    std::string code;
    std::string message;
    std::optional<SourceSpan> location;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline Diagnostic make_error(std::string code, std::string message,
                             std::optional<SourceSpan> location = std::nullopt) {
    return {Severity::error, std::move(code), std::move(message), location};
}

inline Diagnostic make_warning(std::string code, std::string message,
                               std::optional<SourceSpan> location = std::nullopt) {
    return {Severity::warning, std::move(code), std::move(message), location};
}

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) {
        if (d.severity == Severity::error) return true;
    }
    return false;
}

/// Codes only, in emission order. Mostly useful in tests and reports.
inline std::vector<std::string> codes_of(const std::vector<Diagnostic>& diagnostics) {
    std::vector<std::string> out;
    out.reserve(diagnostics.size());
    for (const auto& d : diagnostics) out.push_back(d.code);
    return out;
}

}  // namespace anonlevel

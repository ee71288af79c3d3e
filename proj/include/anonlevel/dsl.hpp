#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anonlevel/diagnostic.hpp"
#include "anonlevel/model.hpp"
#include "anonlevel/semantics.hpp"

namespace anonlevel {

struct ParseResult {
    /// Present iff `diagnostics` holds no error.
    std::optional<ServiceModel> model;
    std::vector<Diagnostic> diagnostics;
    /// Element locations, parallel to `model`'s vectors when a model exists.
    SourceMap sources;

    bool ok() const { return model.has_value(); }
};

/// Parses one `.anon` service description and validates the result.
///
/// Diagnostic codes: DSL-001 lexical error, DSL-002 syntax error, DSL-003
/// duplicate or reserved name, DSL-004 unknown reference, plus every
/// `MOD-0xx` code from validate_model. Every diagnostic carries a span that
/// points into `text` (or at 1:1 for empty input).
ParseResult parse(std::string_view text);

/// Canonical text: declarations grouped (entities, pii, exposures,
/// attachments, group scheme), sorted within each group, one per line,
/// default-valued options omitted, LF line endings. Built-ins are implicit.
std::string serialize(const ServiceModel& model);

}  // namespace anonlevel

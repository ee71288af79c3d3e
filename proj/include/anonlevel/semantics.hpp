#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anonlevel/diagnostic.hpp"
#include "anonlevel/model.hpp"

namespace anonlevel {

/// PII is observable when it is both accessible and interpretable: plain,
/// encoded, or encrypted with the key available. Sealed ciphertext and hashes
/// reveal nothing.
constexpr bool is_observable(Form form) {
    switch (form) {
        case Form::plain:
        case Form::encoded:
        case Form::encrypted_recoverable:
            return true;
        case Form::encrypted_sealed:
        case Form::hashed:
            return false;
    }
    return false;
}

/// Who can map a PII value back to its individual.
struct Resolvers {
    /// Direct PII: anyone who observes the value resolves it.
    bool anyone = false;
    /// Indirect PII: the record holders, sorted.
    std::vector<std::string> holders;

    bool empty() const { return !anyone && holders.empty(); }

    friend bool operator==(const Resolvers&, const Resolvers&) = default;
};

Resolvers effective_resolvers(const PiiItem& pii, const ServiceModel& model);

/// Source locations of model elements, parallel to the model's vectors.
/// Filled in by the parser; absent for models built in code.
struct SourceMap {
    std::vector<std::optional<SourceSpan>> entities;
    std::vector<std::optional<SourceSpan>> pii_items;
    std::vector<std::optional<SourceSpan>> exposures;
    std::vector<std::optional<SourceSpan>> attachments;
    std::optional<SourceSpan> group_scheme;
    std::optional<SourceSpan> header;
};

/// Checks every type invariant of the model. Each violation yields exactly
/// one diagnostic with a stable `MOD-0xx` code; an empty result means the
/// model is well-formed.
///
///   MOD-001 duplicate name            MOD-010 PII subject is not a role
///   MOD-002 no role entity            MOD-011 record holder is a built-in
///   MOD-003 indirect PII, no holder   MOD-012 attachment of unresolvable PII
///   MOD-004 direct PII with holder    MOD-013 attachment recoverable always
///   MOD-005 unresolvable with holder  MOD-014 group manager is not ttp/participant
///   MOD-006 unresolvable, managed     MOD-015 group-manager flag inconsistent
///   MOD-007 context exposure gated    MOD-016 built-in entities malformed
///   MOD-008 dangling reference        MOD-017 record holder is the subject
///   MOD-009 role on non-participant   MOD-018 invalid identifier
///                                     MOD-019 invalid service name
std::vector<Diagnostic> validate_model(const ServiceModel& model, const SourceMap* sources = nullptr);

}  // namespace anonlevel

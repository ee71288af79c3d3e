#pragma once

#include <vector>

#include "anonlevel/diagnostic.hpp"
#include "anonlevel/enum_names.hpp"

namespace anonlevel {

enum class Conditionality { unconditional, conditional, void_, undecided };

template <>
struct EnumNames<Conditionality> {
    static constexpr std::array<std::pair<Conditionality, std::string_view>, 4> names{{
        {Conditionality::unconditional, "unconditional"},
        {Conditionality::conditional, "conditional"},
        {Conditionality::void_, "void"},
        {Conditionality::undecided, "undecided"},
    }};
};

enum class RecognitionSource { identifiability, traceability };

template <>
struct EnumNames<RecognitionSource> {
    static constexpr std::array<std::pair<RecognitionSource, std::string_view>, 2> names{{
        {RecognitionSource::identifiability, "identifiability"},
        {RecognitionSource::traceability, "traceability"},
    }};
};

struct Recognisability {
    Conditionality conditionality = Conditionality::void_;
    /// Sorted, without duplicates.
    std::vector<RecognitionSource> sources;

    bool has(RecognitionSource s) const;

    friend bool operator==(const Recognisability&, const Recognisability&) = default;
};

struct Linkability {
    Conditionality conditionality = Conditionality::void_;

    friend bool operator==(const Linkability&, const Linkability&) = default;
};

enum class AccountabilityKind { direct, indirect, void_ };

template <>
struct EnumNames<AccountabilityKind> {
    static constexpr std::array<std::pair<AccountabilityKind, std::string_view>, 3> names{{
        {AccountabilityKind::direct, "direct"},
        {AccountabilityKind::indirect, "indirect"},
        {AccountabilityKind::void_, "void"},
    }};
};

struct Accountability {
    AccountabilityKind kind = AccountabilityKind::void_;

    friend bool operator==(const Accountability&, const Accountability&) = default;
};

/// The security properties derived for one investigation.
struct DerivedProperties {
    Recognisability recognisability;
    Linkability linkability;
    Accountability accountability;
    /// Some resolvable PII of the observee travels with its items of
    /// interest in observable form, so those items can be traced back.
    bool ioi_traceable = false;

    friend bool operator==(const DerivedProperties&, const DerivedProperties&) = default;
};

/// Checks the implication chain between derived properties:
///   IMP-001 unconditional recognisability with void linkability
///   IMP-002 recognisability without any accountability
///   IMP-003 identifiability as a source while no item of interest is traceable
///   IMP-004 void recognisability that still lists sources
/// A non-empty result means the engine contradicted itself.
std::vector<Diagnostic> apply_implications(const DerivedProperties& derived);

}  // namespace anonlevel

#pragma once

// Trust-based investigation of a service model: from the observee's point of
// view and a trusted set, discover the scope of trust, place the service in
// the lowest level whose definition holds, and derive the security
// properties that follow from it.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "anonlevel/diagnostic.hpp"
#include "anonlevel/level.hpp"
#include "anonlevel/model.hpp"
#include "anonlevel/params.hpp"
#include "anonlevel/properties.hpp"
#include "anonlevel/taxonomy.hpp"

namespace anonlevel {

/// Entities the observee is forced to rely on to remain unrecognised. May
/// include the observee itself and the `@outside` marker.
struct ScopeOfTrust {
    std::set<std::string> members;

    bool contains(const std::string& name) const { return members.count(name) != 0; }

    friend bool operator==(const ScopeOfTrust&, const ScopeOfTrust&) = default;
};

struct PublicityCheck {
    bool satisfied = false;
    /// Satisfied only because distrusted observers of indirect PII were left
    /// out of the scope while every resolver is trusted.
    bool exception_applied = false;

    friend bool operator==(const PublicityCheck&, const PublicityCheck&) = default;
};

struct Classification {
    Level level;
    Variant variant = Variant::none;
    ScopeOfTrust scope;
    Recognisability recognisability;
    Linkability linkability;
    Accountability accountability;
    bool ioi_traceable = false;
    PublicityCheck publicity;
    bool group_anonymity = false;
    TaxonomyMap correspondences;
    std::vector<Diagnostic> warnings;

    DerivedProperties derived() const { return {recognisability, linkability, accountability, ioi_traceable}; }

    friend bool operator==(const Classification&, const Classification&) = default;
};

struct ClassifyResult {
    Classification classification;
    /// Group-scheme and consistency errors (GS-0xx, CLS-001, CLS-002).
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }

    friend bool operator==(const ClassifyResult&, const ClassifyResult&) = default;
};

/// Raised when the engine's own self-checks fail.
class InternalError : public std::logic_error {
public:
    InternalError(const std::string& what, std::vector<Diagnostic> diagnostics)
        : std::logic_error(what), diagnostics_(std::move(diagnostics)) {}

    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

// All functions below expect a well-formed model and normalised parameters.

ScopeOfTrust scope_of_trust(const ServiceModel& model, const AnalysisParams& params);

/// Trusted entities other than the observee that can resolve observable
/// observee PII under ordinary circumstances: trusted record holders of
/// exposed indirect PII, and trusted observers of direct PII.
std::set<std::string> identity_managers(const ServiceModel& model, const AnalysisParams& params);

bool level_predicate(const Level& level, const ServiceModel& model, const AnalysisParams& params);

Recognisability derive_recognisability(const ServiceModel& model, const AnalysisParams& params, const Level& level);
Linkability derive_linkability(const ServiceModel& model, const AnalysisParams& params, const Level& level);
Accountability derive_accountability(const ServiceModel& model, const AnalysisParams& params, const Level& level);
bool derive_ioi_traceable(const ServiceModel& model, const AnalysisParams& params);

PublicityCheck check_publicity_constraint(const ScopeOfTrust& scope, const AnalysisParams& params,
                                          const ServiceModel& model);

/// Only meaningful when the model declares a group scheme; `classification`
/// is the result computed without the group check.
///
///   GS-001 a declared condition (groups, authentication, acting on behalf) is false
///   GS-002 recognisability or linkability is unconditional
///   GS-003 level below revocable
///   GS-004 (warning) declared manager is not the identity manager
///   GS-005 revocable level without a declared manager
std::vector<Diagnostic> validate_group_scheme(const ServiceModel& model, const AnalysisParams& params,
                                              const Classification& classification);

/// Cross-checks a classification against the level characterisation:
///   TBL-001 scope-of-trust bounds     TBL-004 variant does not fit the level
///   TBL-002 recognisability row       TBL-005 publicity constraint
///   TBL-003 linkability/accountability pair not allowed for the level
std::vector<Diagnostic> check_level_bounds(const Classification& classification, const AnalysisParams& params);

/// Lowest-level principle: the smallest degree whose predicate holds.
/// Throws InternalError when the self-checks fail.
ClassifyResult classify(const ServiceModel& model, const AnalysisParams& params);

struct SweepEntry {
    std::set<std::string> trusted;
    ClassifyResult result;
};

struct SweepResult {
    /// Participants (other than the observee) that may or may not be trusted.
    std::vector<std::string> optional_participants;
    std::vector<SweepEntry> entries;
    std::vector<Diagnostic> diagnostics;
};

inline constexpr std::size_t kMaxSweepParticipants = 20;

/// Classifies every admissible trusted set: all subsets of the optional
/// participants, each joined with the observee and all TTPs. Ordered by
/// subset size, then lexicographically.
///   CLS-004 observee is not a role    CLS-005 more than 20 optional participants
SweepResult sweep(const ServiceModel& model, const std::string& observee);

}  // namespace anonlevel

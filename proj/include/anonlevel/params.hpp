#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "anonlevel/diagnostic.hpp"
#include "anonlevel/model.hpp"

namespace anonlevel {

/// The two investigative parameters: whose viewpoint, and whom they trust.
/// A normalised trusted set always holds the observee and every TTP, and
/// never a DTP or a built-in.
struct AnalysisParams {
    std::string observee;
    std::set<std::string> trusted;

    bool is_trusted(const std::string& entity) const { return trusted.count(entity) != 0; }

    friend bool operator==(const AnalysisParams&, const AnalysisParams&) = default;
};

struct ParamsResult {
    std::optional<AnalysisParams> params;
    std::vector<Diagnostic> diagnostics;
};

/// Builds a normalised parameter set. `extra_trusted` is additive over the
/// mandatory members. When `observee` is empty and the model has exactly one
/// role, that role is used.
///
///   DSL-004 unknown entity name      PAR-001 entity cannot be trusted
///   CLS-004 observee is not a role   PAR-002 observee required (several roles)
ParamsResult normalize_params(const ServiceModel& model, const std::string& observee,
                              const std::vector<std::string>& extra_trusted = {});

/// Mandatory trusted members: the observee plus every TTP.
std::set<std::string> mandatory_trusted(const ServiceModel& model, const std::string& observee);

}  // namespace anonlevel

#include "anonlevel/params.hpp"

namespace anonlevel {

std::set<std::string> mandatory_trusted(const ServiceModel& model, const std::string& observee) {
    std::set<std::string> out{observee};
    for (const auto& e : model.entities) {
        if (e.kind == EntityKind::ttp) out.insert(e.name);
    }
    return out;
}

ParamsResult normalize_params(const ServiceModel& model, const std::string& observee,
                              const std::vector<std::string>& extra_trusted) {
    ParamsResult result;
    std::string who = observee;
    if (who.empty()) {
        const auto roles = role_names(model);
        if (roles.size() == 1) {
            who = roles.front();
        } else {
            result.diagnostics.push_back(make_error(
                "PAR-002", roles.empty() ? "model declares no role to observe"
                                         : "model has several roles; choose one with --observee"));
            return result;
        }
    }

    const Entity* entity = model.find_entity(who);
    if (entity == nullptr) {
        result.diagnostics.push_back(make_error("DSL-004", "unknown entity '" + who + "'"));
    } else if (!entity->is_role) {
        result.diagnostics.push_back(make_error("CLS-004", "observee '" + who + "' is not a role"));
    }

    AnalysisParams params{who, mandatory_trusted(model, who)};
    for (const auto& name : extra_trusted) {
        const Entity* e = model.find_entity(name);
        if (e == nullptr) {
            result.diagnostics.push_back(make_error("DSL-004", "unknown entity '" + name + "'"));
        } else if (e->kind != EntityKind::participant && e->kind != EntityKind::ttp) {
            result.diagnostics.push_back(make_error(
                "PAR-001", "'" + name + "' is a " + std::string(to_string(e->kind)) + " and is distrusted by definition"));
        } else {
            params.trusted.insert(name);
        }
    }
    if (!has_errors(result.diagnostics)) result.params = std::move(params);
    return result;
}

}  // namespace anonlevel

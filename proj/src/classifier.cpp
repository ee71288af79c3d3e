#include "anonlevel/classifier.hpp"

#include <algorithm>

#include "anonlevel/semantics.hpp"

namespace anonlevel {
namespace {

bool is_builtin_observer(const std::string& name) { return is_builtin_name(name); }

struct Sighting {
    const ExposureFact* fact;
    const PiiItem* pii;
};

struct Binding {
    const IoiAttachment* attachment;
    const PiiItem* pii;
};

// The facts that matter from one observee's point of view. Exposures to the
// observee itself and PII of other roles are irrelevant; sealed or hashed
// forms reveal nothing.
class Investigation {
public:
    Investigation(const ServiceModel& model, const AnalysisParams& params) : model_(model), params_(params) {
        for (const auto& x : model.exposures) {
            if (x.observer == params.observee || !is_observable(x.form)) continue;
            const PiiItem* p = model.find_pii(x.pii);
            if (p == nullptr || p->subject != params.observee) continue;
            if (x.when == Trigger::always) {
                ordinary_.push_back({&x, p});
            } else if (p->resolvable()) {
                triggered_.push_back({&x, p});
            }
        }
        for (const auto& a : model.attachments) {
            if (!is_observable(a.form)) continue;
            const PiiItem* p = model.find_pii(a.pii);
            if (p == nullptr || p->subject != params.observee || !p->resolvable()) continue;
            attached_.push_back({&a, p});
        }
    }

    const ServiceModel& model() const { return model_; }
    const AnalysisParams& params() const { return params_; }

    bool trusted(const std::string& entity) const { return params_.is_trusted(entity); }

    /// Always-observable exposures of observee PII, any resolvability.
    const std::vector<Sighting>& ordinary() const { return ordinary_; }
    /// Trigger-gated observable exposures of resolvable observee PII.
    const std::vector<Sighting>& triggered() const { return triggered_; }
    /// Observable attachments of resolvable observee PII.
    const std::vector<Binding>& attached() const { return attached_; }

    std::vector<Sighting> ordinary_resolvable() const {
        std::vector<Sighting> out;
        for (const auto& s : ordinary_) {
            if (s.pii->resolvable()) out.push_back(s);
        }
        return out;
    }

    // Direct PII seen by the public or from outside the system.
    std::vector<Sighting> void_sightings() const {
        std::vector<Sighting> out;
        for (const auto& s : ordinary_) {
            if (s.pii->resolvability == Resolvability::direct && is_builtin_observer(s.fact->observer)) {
                out.push_back(s);
            }
        }
        return out;
    }

    bool publicly_observed(const PiiItem* pii) const {
        return std::any_of(ordinary_.begin(), ordinary_.end(), [&](const Sighting& s) {
            return s.pii == pii && is_builtin_observer(s.fact->observer);
        });
    }

    // Indirect PII in sight whose record is (also) held by a distrusted
    // party, or direct PII seen by a distrusted insider but not publicly.
    std::vector<Sighting> apparent_sightings() const {
        std::vector<Sighting> out;
        for (const auto& s : ordinary_) {
            const PiiItem& p = *s.pii;
            if (p.resolvability == Resolvability::indirect) {
                const auto resolvers = effective_resolvers(p, model_);
                const bool distrusted_holder = std::any_of(resolvers.holders.begin(), resolvers.holders.end(),
                                                           [&](const std::string& h) { return !trusted(h); });
                if (distrusted_holder) out.push_back(s);
            } else if (p.resolvability == Resolvability::direct) {
                const auto& observer = s.fact->observer;
                if (!trusted(observer) && !is_builtin_observer(observer) && !publicly_observed(&p)) {
                    out.push_back(s);
                }
            }
        }
        return out;
    }

    std::set<std::string> identity_managers() const {
        std::set<std::string> out;
        for (const auto& s : ordinary_) {
            const auto resolvers = effective_resolvers(*s.pii, model_);
            if (resolvers.anyone) {
                if (trusted(s.fact->observer)) out.insert(s.fact->observer);
            } else {
                for (const auto& h : resolvers.holders) {
                    if (trusted(h) && h != params_.observee) out.insert(h);
                }
            }
        }
        return out;
    }

    bool has_conditional_mechanism() const {
        return !attached_.empty() || !triggered_.empty() || !identity_managers().empty();
    }

    ScopeOfTrust scope() const {
        ScopeOfTrust scope;
        for (const auto& s : ordinary_) {
            const auto resolvers = effective_resolvers(*s.pii, model_);
            if (resolvers.anyone) {
                scope.members.insert(s.fact->observer);
                if (is_builtin_observer(s.fact->observer)) scope.members.insert(std::string(kOutsideEntity));
            } else {
                scope.members.insert(resolvers.holders.begin(), resolvers.holders.end());
            }
        }
        if (has_conditional_mechanism()) scope.members.insert(params_.observee);
        return scope;
    }

    bool predicate(int degree) const {
        switch (degree) {
            case 0:
                return !void_sightings().empty();
            case 1:
                return !apparent_sightings().empty();
            case 2: {
                if (identity_managers().empty()) return false;
                const auto s = scope();
                const bool other_trusted = std::any_of(s.members.begin(), s.members.end(), [&](const std::string& m) {
                    return m != params_.observee && trusted(m);
                });
                return s.contains(params_.observee) && other_trusted;
            }
            case 3: {
                if (!identity_managers().empty()) return false;
                if (attached_.empty() && triggered_.empty()) return false;
                const auto seen = ordinary_resolvable();
                return std::none_of(seen.begin(), seen.end(),
                                    [](const Sighting& s) { return s.fact->via == Channel::context; });
            }
            case 4:
                return ordinary_resolvable().empty() && triggered_.empty() && attached_.empty();
            default:
                return false;
        }
    }

    int lowest_degree() const {
        for (int d = 0; d < 4; ++d) {
            if (predicate(d)) return d;
        }
        return 4;
    }

private:
    const ServiceModel& model_;
    const AnalysisParams& params_;
    std::vector<Sighting> ordinary_;
    std::vector<Sighting> triggered_;
    std::vector<Binding> attached_;
};

Conditionality recognisability_type(int degree) {
    if (degree <= 1) return Conditionality::unconditional;
    if (degree <= 3) return Conditionality::conditional;
    return Conditionality::void_;
}

bool is_subset(const std::set<std::string>& a, const std::set<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

ScopeOfTrust scope_of_trust(const ServiceModel& model, const AnalysisParams& params) {
    return Investigation(model, params).scope();
}

std::set<std::string> identity_managers(const ServiceModel& model, const AnalysisParams& params) {
    return Investigation(model, params).identity_managers();
}

bool level_predicate(const Level& level, const ServiceModel& model, const AnalysisParams& params) {
    return Investigation(model, params).predicate(level.degree);
}

Recognisability derive_recognisability(const ServiceModel& model, const AnalysisParams& params, const Level& level) {
    const Investigation inv(model, params);
    Recognisability rec{recognisability_type(level.degree), {}};
    std::vector<Channel> channels;
    switch (level.degree) {
        case 0:
            for (const auto& s : inv.void_sightings()) channels.push_back(s.fact->via);
            break;
        case 1:
            for (const auto& s : inv.apparent_sightings()) channels.push_back(s.fact->via);
            break;
        case 2:
            for (const auto& s : inv.ordinary_resolvable()) channels.push_back(s.fact->via);
            break;
        case 3:
            for (const auto& s : inv.triggered()) channels.push_back(s.fact->via);
            if (!inv.attached().empty()) channels.push_back(Channel::data);
            break;
        default:
            break;
    }
    if (std::count(channels.begin(), channels.end(), Channel::data)) {
        rec.sources.push_back(RecognitionSource::identifiability);
    }
    if (std::count(channels.begin(), channels.end(), Channel::context)) {
        rec.sources.push_back(RecognitionSource::traceability);
    }
    return rec;
}

Linkability derive_linkability(const ServiceModel& model, const AnalysisParams& params, const Level& level) {
    if (level.degree <= 1) return {Conditionality::unconditional};
    const Investigation inv(model, params);
    const auto& seen = inv.ordinary();
    const bool persistent_identifier = std::any_of(seen.begin(), seen.end(), [&](const Sighting& s) {
        return s.pii->persistence == Persistence::persistent && !inv.trusted(s.fact->observer);
    });
    if (persistent_identifier) return {Conditionality::unconditional};
    if (level.degree <= 3) return {Conditionality::conditional};
    return {Conditionality::void_};
}

Accountability derive_accountability(const ServiceModel& model, const AnalysisParams& params, const Level& level) {
    const Investigation inv(model, params);
    // Authorities need no mediator for direct PII or authority-managed records.
    auto direct_route = [](const PiiItem& p) {
        return p.resolvability == Resolvability::direct ||
               (p.resolvability == Resolvability::indirect && p.authority_managed);
    };
    bool any = false;
    bool direct = false;
    for (const auto* group : {&inv.ordinary(), &inv.triggered()}) {
        for (const auto& s : *group) {
            if (!s.pii->resolvable()) continue;
            any = true;
            if (direct_route(*s.pii) && !inv.trusted(s.fact->observer)) direct = true;
        }
    }
    for (const auto& b : inv.attached()) {
        any = true;
        if (direct_route(*b.pii)) direct = true;
    }
    if (!any) return {AccountabilityKind::void_};
    // Under revocable anonymity identities are entirely subject to the
    // identity manager, which mediates every route.
    if (level.degree == 2) return {AccountabilityKind::indirect};
    return {direct ? AccountabilityKind::direct : AccountabilityKind::indirect};
}

bool derive_ioi_traceable(const ServiceModel& model, const AnalysisParams& params) {
    const Investigation inv(model, params);
    if (!inv.attached().empty()) return true;
    for (const auto* group : {&inv.ordinary(), &inv.triggered()}) {
        for (const auto& s : *group) {
            if (s.pii->resolvable() && s.fact->via == Channel::data) return true;
        }
    }
    return false;
}

PublicityCheck check_publicity_constraint(const ScopeOfTrust& scope, const AnalysisParams& params,
                                          const ServiceModel& model) {
    PublicityCheck out;
    out.satisfied = is_subset(scope.members, params.trusted);
    if (!out.satisfied) return out;
    const Investigation inv(model, params);
    out.exception_applied = std::any_of(inv.ordinary().begin(), inv.ordinary().end(), [&](const Sighting& s) {
        return s.pii->resolvability == Resolvability::indirect && !inv.trusted(s.fact->observer);
    });
    return out;
}

std::vector<Diagnostic> validate_group_scheme(const ServiceModel& model, const AnalysisParams& params,
                                              const Classification& classification) {
    std::vector<Diagnostic> out;
    if (!model.group_scheme) return out;
    const auto& g = *model.group_scheme;
    std::string missing;
    if (!g.operates_on_groups) missing += " operates_on_groups";
    if (!g.group_authentication) missing += " group_authentication";
    if (!g.acts_on_behalf) missing += " acts_on_behalf";
    if (!missing.empty()) {
        out.push_back(make_error("GS-001", "group scheme condition(s) not met:" + missing));
    }
    if (classification.recognisability.conditionality == Conditionality::unconditional ||
        classification.linkability.conditionality == Conditionality::unconditional) {
        out.push_back(make_error("GS-002",
                                 "group schemes preclude unconditional recognisability and unconditional linkability"));
    }
    const int degree = classification.level.degree;
    if (degree < 2) {
        out.push_back(make_error("GS-003", "group anonymity cannot be below revocable anonymity (derived " +
                                               std::string(classification.level.abbr) + ")"));
    }
    if (g.manager) {
        const auto managers = identity_managers(model, params);
        if (!managers.count(*g.manager)) {
            out.push_back(make_warning("GS-004", "declared group manager '" + *g.manager +
                                                     "' does not act as identity manager"));
        }
    } else if (degree == 2) {
        out.push_back(make_error("GS-005", "revocable group anonymity requires a group manager"));
    }
    return out;
}

std::vector<Diagnostic> check_level_bounds(const Classification& c, const AnalysisParams& params) {
    std::vector<Diagnostic> out;
    const int degree = c.level.degree;
    const auto& members = c.scope.members;
    const std::string outside(kOutsideEntity);
    const std::string public_(kPublicEntity);

    bool scope_ok = true;
    switch (degree) {
        case 0:
            scope_ok = members.count(outside) != 0;
            break;
        case 1:
            scope_ok = !members.count(public_) && !members.count(outside) && !is_subset(members, params.trusted);
            break;
        case 2:
            scope_ok = members.count(params.observee) && is_subset(members, params.trusted) && members.size() >= 2;
            break;
        case 3:
            scope_ok = is_subset(members, {params.observee});
            break;
        default:
            scope_ok = members.empty();
            break;
    }
    if (!scope_ok) out.push_back(make_error("TBL-001", "scope of trust violates the bounds of " + std::string(c.level.abbr)));

    const auto& rec = c.recognisability;
    bool rec_ok = rec.conditionality == recognisability_type(degree);
    if (degree <= 2) rec_ok = rec_ok && !rec.sources.empty();
    if (degree == 3) rec_ok = rec_ok && rec.sources == std::vector{RecognitionSource::identifiability};
    if (degree == 4) rec_ok = rec_ok && rec.sources.empty();
    if (!rec_ok) out.push_back(make_error("TBL-002", "recognisability does not match " + std::string(c.level.abbr)));

    const auto link = c.linkability.conditionality;
    const auto acc = c.accountability.kind;
    using C = Conditionality;
    using A = AccountabilityKind;
    bool pair_ok = false;
    switch (degree) {
        case 0: pair_ok = link == C::unconditional && acc == A::direct; break;
        case 1: pair_ok = link == C::unconditional && acc != A::void_; break;
        case 2: pair_ok = (link == C::unconditional || link == C::conditional) && acc == A::indirect; break;
        case 3: pair_ok = (link == C::unconditional || link == C::conditional) && acc != A::void_; break;
        default: pair_ok = (link == C::unconditional || link == C::void_) && acc == A::void_; break;
    }
    if (!pair_ok) {
        out.push_back(make_error("TBL-003", "linkability " + std::string(to_string(link)) + " with accountability " +
                                                std::string(to_string(acc)) + " is not allowed at " +
                                                std::string(c.level.abbr)));
    }

    const bool variant_ok = (degree <= 1) == (c.variant == Variant::none) &&
                            (!c.publicity.exception_applied || degree == 2);
    if (!variant_ok) out.push_back(make_error("TBL-004", "variant or publicity exception inconsistent with level"));

    if ((degree >= 2) != c.publicity.satisfied) {
        out.push_back(make_error("TBL-005", "publicity constraint outcome inconsistent with level"));
    }
    return out;
}

ClassifyResult classify(const ServiceModel& model, const AnalysisParams& params) {
    const Investigation inv(model, params);
    ClassifyResult result;
    Classification& c = result.classification;
    c.level = Level::from_degree(inv.lowest_degree());
    c.scope = inv.scope();
    c.recognisability = derive_recognisability(model, params, c.level);
    c.linkability = derive_linkability(model, params, c.level);
    c.accountability = derive_accountability(model, params, c.level);
    c.ioi_traceable = derive_ioi_traceable(model, params);
    if (c.level.degree <= 1) {
        c.variant = Variant::none;
    } else {
        c.variant = c.linkability.conditionality == Conditionality::unconditional ? Variant::linkable
                                                                                  : Variant::unlinkable;
    }
    c.publicity = check_publicity_constraint(c.scope, params, model);
    if (auto map = map_taxonomies(c.level, c.variant)) c.correspondences = *map;

    if (model.group_scheme) {
        auto findings = validate_group_scheme(model, params, c);
        const bool failed = has_errors(findings);
        for (auto& d : findings) {
            (d.severity == Severity::warning ? c.warnings : result.diagnostics).push_back(std::move(d));
        }
        if (failed) {
            if (c.level.degree < 2) {
                result.diagnostics.push_back(
                    make_error("CLS-001", "model declares a group scheme but derives " + std::string(c.level.abbr)));
            }
            result.diagnostics.push_back(make_error("CLS-002", "group scheme validation failed"));
        }
        c.group_anonymity = !failed;
    }

    auto problems = apply_implications(c.derived());
    auto bounds = check_level_bounds(c, params);
    problems.insert(problems.end(), bounds.begin(), bounds.end());
    if (!problems.empty()) {
        throw InternalError("classification of '" + model.name + "' failed its self-checks", std::move(problems));
    }
    return result;
}

SweepResult sweep(const ServiceModel& model, const std::string& observee) {
    SweepResult out;
    const Entity* who = model.find_entity(observee);
    if (who == nullptr || !who->is_role) {
        out.diagnostics.push_back(make_error("CLS-004", "observee '" + observee + "' is not a role"));
        return out;
    }
    for (const auto& e : model.entities) {
        if (e.kind == EntityKind::participant && e.name != observee) out.optional_participants.push_back(e.name);
    }
    std::sort(out.optional_participants.begin(), out.optional_participants.end());
    const std::size_t n = out.optional_participants.size();
    if (n > kMaxSweepParticipants) {
        out.diagnostics.push_back(make_error("CLS-005", std::to_string(n) + " optional participants exceed the limit of " +
                                                            std::to_string(kMaxSweepParticipants)));
        return out;
    }

    const auto base = mandatory_trusted(model, observee);
    // Combinations of each size in lexicographic order.
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::size_t> pick(k);
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            AnalysisParams params{observee, base};
            for (std::size_t i : pick) params.trusted.insert(out.optional_participants[i]);
            std::set<std::string> chosen;
            for (std::size_t i : pick) chosen.insert(out.optional_participants[i]);
            out.entries.push_back({std::move(chosen), classify(model, params)});

            std::size_t i = k;
            while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace anonlevel

#include "anonlevel/semantics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace anonlevel {
namespace {

std::optional<SourceSpan> span_at(const std::vector<std::optional<SourceSpan>>* spans, std::size_t i) {
    if (spans == nullptr || i >= spans->size()) return std::nullopt;
    return (*spans)[i];
}

class Validator {
public:
    Validator(const ServiceModel& model, const SourceMap* sources) : model_(model), sources_(sources) {}

    std::vector<Diagnostic> run() {
        check_header();
        check_entities();
        check_pii();
        check_exposures();
        check_attachments();
        check_group_scheme();
        return std::move(out_);
    }

private:
    void error(const char* code, std::string message, std::optional<SourceSpan> where) {
        out_.push_back(make_error(code, std::move(message), where));
    }

    std::optional<SourceSpan> entity_span(std::size_t i) const {
        return span_at(sources_ ? &sources_->entities : nullptr, i);
    }
    std::optional<SourceSpan> pii_span(std::size_t i) const {
        return span_at(sources_ ? &sources_->pii_items : nullptr, i);
    }
    std::optional<SourceSpan> exposure_span(std::size_t i) const {
        return span_at(sources_ ? &sources_->exposures : nullptr, i);
    }
    std::optional<SourceSpan> attachment_span(std::size_t i) const {
        return span_at(sources_ ? &sources_->attachments : nullptr, i);
    }
    std::optional<SourceSpan> group_span() const { return sources_ ? sources_->group_scheme : std::nullopt; }

    void check_header() {
        bool bad = false;
        for (unsigned char c : model_.name) {
            if (c < 0x20 && c != '\t' && c != '\n' && c != '\r') bad = true;
            if (c == 0x7f) bad = true;
        }
        if (bad) {
            error("MOD-019", "service name contains control characters",
                  sources_ ? sources_->header : std::nullopt);
        }
    }

    void check_entities() {
        int publics = 0;
        int outsides = 0;
        bool builtin_malformed = false;
        bool any_role = false;
        std::set<std::string> seen;
        for (std::size_t i = 0; i < model_.entities.size(); ++i) {
            const Entity& e = model_.entities[i];
            const auto where = entity_span(i);
            if (!seen.insert(e.name).second) {
                error("MOD-001", "duplicate name '" + e.name + "'", where);
                continue;
            }
            const bool builtin_kind = e.kind == EntityKind::public_ || e.kind == EntityKind::outside;
            if (builtin_kind || is_builtin_name(e.name)) {
                const bool ok = (e.kind == EntityKind::public_ && e.name == kPublicEntity) ||
                                (e.kind == EntityKind::outside && e.name == kOutsideEntity);
                if (!ok || e.is_role) builtin_malformed = true;
                if (e.kind == EntityKind::public_) ++publics;
                if (e.kind == EntityKind::outside) ++outsides;
                continue;
            }
            if (!is_valid_identifier(e.name)) {
                error("MOD-018", "'" + e.name + "' is not a valid identifier", where);
            }
            if (e.is_role && e.kind != EntityKind::participant) {
                error("MOD-009", "only participants can be roles ('" + e.name + "' is " +
                                     std::string(to_string(e.kind)) + ")",
                      where);
            }
            any_role = any_role || (e.is_role && e.kind == EntityKind::participant);
            const bool names_it = model_.group_scheme && model_.group_scheme->manager &&
                                  *model_.group_scheme->manager == e.name;
            if (e.declared_group_manager != names_it) {
                error("MOD-015", "group-manager flag on '" + e.name + "' does not match the group scheme",
                      where);
            }
        }
        if (builtin_malformed || publics != 1 || outsides != 1) {
            error("MOD-016", "model must contain exactly one '@public' and one '@outside' entity",
                  sources_ ? sources_->header : std::nullopt);
        }
        if (!any_role) {
            error("MOD-002", "model declares no role entity", sources_ ? sources_->header : std::nullopt);
        }
    }

    void check_pii() {
        std::set<std::string> entity_names;
        for (const auto& e : model_.entities) entity_names.insert(e.name);
        std::set<std::string> seen;
        for (std::size_t i = 0; i < model_.pii_items.size(); ++i) {
            const PiiItem& p = model_.pii_items[i];
            const auto where = pii_span(i);
            if (entity_names.count(p.name) || !seen.insert(p.name).second) {
                error("MOD-001", "duplicate name '" + p.name + "'", where);
                continue;
            }
            if (!is_valid_identifier(p.name)) {
                error("MOD-018", "'" + p.name + "' is not a valid identifier", where);
            }
            const Entity* subject = model_.find_entity(p.subject);
            if (subject == nullptr) {
                error("MOD-008", "PII '" + p.name + "' refers to unknown entity '" + p.subject + "'", where);
            } else if (!subject->is_role) {
                error("MOD-010", "PII '" + p.name + "' must describe a role, '" + p.subject + "' is not one",
                      where);
            }
            for (const auto& holder : p.record_holders) {
                if (is_builtin_name(holder)) {
                    error("MOD-011", "'" + holder + "' cannot hold a PII record", where);
                } else if (model_.find_entity(holder) == nullptr) {
                    error("MOD-008", "PII '" + p.name + "' refers to unknown entity '" + holder + "'", where);
                } else if (holder == p.subject) {
                    error("MOD-017", "'" + holder + "' cannot hold the record of its own PII", where);
                }
            }
            switch (p.resolvability) {
                case Resolvability::indirect:
                    if (p.record_holders.empty()) {
                        error("MOD-003", "indirect PII requires record holder ('" + p.name + "')", where);
                    }
                    break;
                case Resolvability::direct:
                    if (!p.record_holders.empty()) {
                        error("MOD-004", "direct PII cannot have record holders ('" + p.name + "')", where);
                    }
                    break;
                case Resolvability::unresolvable:
                    if (!p.record_holders.empty()) {
                        error("MOD-005", "unresolvable PII cannot have record holders ('" + p.name + "')",
                              where);
                    }
                    if (p.authority_managed) {
                        error("MOD-006", "unresolvable PII cannot be authority managed ('" + p.name + "')",
                              where);
                    }
                    break;
            }
        }
    }

    void check_exposures() {
        for (std::size_t i = 0; i < model_.exposures.size(); ++i) {
            const ExposureFact& x = model_.exposures[i];
            const auto where = exposure_span(i);
            if (model_.find_entity(x.observer) == nullptr) {
                error("MOD-008", "exposure refers to unknown entity '" + x.observer + "'", where);
            }
            if (model_.find_pii(x.pii) == nullptr) {
                error("MOD-008", "exposure refers to unknown PII '" + x.pii + "'", where);
            }
            if (x.via == Channel::context && x.when != Trigger::always) {
                error("MOD-007", "context exposures are observed during ordinary interaction and must use when=always",
                      where);
            }
        }
    }

    void check_attachments() {
        for (std::size_t i = 0; i < model_.attachments.size(); ++i) {
            const IoiAttachment& a = model_.attachments[i];
            const auto where = attachment_span(i);
            const PiiItem* p = model_.find_pii(a.pii);
            if (p == nullptr) {
                error("MOD-008", "attachment refers to unknown PII '" + a.pii + "'", where);
            } else if (!p->resolvable()) {
                error("MOD-012", "attached PII must be resolvable ('" + a.pii + "' is unresolvable)", where);
            }
            if (a.recoverable_on == Trigger::always) {
                error("MOD-013", "attachments become recoverable on a trigger, not always", where);
            }
        }
    }

    void check_group_scheme() {
        if (!model_.group_scheme || !model_.group_scheme->manager) return;
        const std::string& name = *model_.group_scheme->manager;
        const Entity* manager = model_.find_entity(name);
        if (manager == nullptr) {
            error("MOD-008", "group scheme refers to unknown entity '" + name + "'", group_span());
        } else if (manager->kind != EntityKind::ttp && manager->kind != EntityKind::participant) {
            error("MOD-014", "group manager must be a ttp or participant ('" + name + "')", group_span());
        }
    }

    const ServiceModel& model_;
    const SourceMap* sources_;
    std::vector<Diagnostic> out_;
};

}  // namespace

Resolvers effective_resolvers(const PiiItem& pii, const ServiceModel& /*model*/) {
    Resolvers r;
    switch (pii.resolvability) {
        case Resolvability::direct:
            r.anyone = true;
            break;
        case Resolvability::indirect:
            r.holders = pii.record_holders;
            std::sort(r.holders.begin(), r.holders.end());
            r.holders.erase(std::unique(r.holders.begin(), r.holders.end()), r.holders.end());
            break;
        case Resolvability::unresolvable:
            break;
    }
    return r;
}

std::vector<Diagnostic> validate_model(const ServiceModel& model, const SourceMap* sources) {
    return Validator(model, sources).run();
}

}  // namespace anonlevel

#include "anonlevel/model.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

namespace anonlevel {
namespace {

constexpr std::string_view kKeywords[] = {
    "service",      "entity",         "kind",
    "participant",  "ttp",            "dtp",
    "role",         "pii",            "of",
    "resolvability", "direct",        "indirect",
    "unresolvable", "persistence",    "persistent",
    "mutable",      "transaction",    "record_holder",
    "authority_managed", "observes",  "public",
    "outside",      "form",           "plain",
    "encoded",      "encrypted_recoverable", "encrypted_sealed",
    "hashed",       "when",           "always",
    "on_fraud",     "on_disobedience", "on_expiry",
    "via",          "data",           "context",
    "attach",       "to_ioi",         "recoverable_on",
    "group_scheme", "operates_on_groups", "group_authentication",
    "acts_on_behalf", "manager",      "true",
    "false",
};

auto entity_key(const Entity& e) { return std::tie(e.name, e.kind, e.is_role, e.declared_group_manager); }

auto exposure_key(const ExposureFact& e) { return std::tie(e.observer, e.pii, e.form, e.when, e.via); }

auto attachment_key(const IoiAttachment& a) { return std::tie(a.pii, a.form, a.recoverable_on); }

}  // namespace

const Entity* ServiceModel::find_entity(std::string_view entity_name) const {
    auto it = std::find_if(entities.begin(), entities.end(),
                           [&](const Entity& e) { return e.name == entity_name; });
    return it == entities.end() ? nullptr : &*it;
}

const PiiItem* ServiceModel::find_pii(std::string_view pii_name) const {
    auto it = std::find_if(pii_items.begin(), pii_items.end(),
                           [&](const PiiItem& p) { return p.name == pii_name; });
    return it == pii_items.end() ? nullptr : &*it;
}

bool operator==(const ServiceModel& a, const ServiceModel& b) {
    const ServiceModel ca = canonical(a);
    const ServiceModel cb = canonical(b);
    return ca.name == cb.name && ca.entities == cb.entities && ca.pii_items == cb.pii_items &&
           ca.exposures == cb.exposures && ca.attachments == cb.attachments &&
           ca.group_scheme == cb.group_scheme;
}

std::vector<Entity> builtin_entities() {
    return {
        Entity{std::string(kPublicEntity), EntityKind::public_, false, false},
        Entity{std::string(kOutsideEntity), EntityKind::outside, false, false},
    };
}

ServiceModel with_builtins(ServiceModel model) {
    for (auto& builtin : builtin_entities()) {
        if (model.find_entity(builtin.name) == nullptr) model.entities.push_back(std::move(builtin));
    }
    for (auto& e : model.entities) {
        e.declared_group_manager = model.group_scheme && model.group_scheme->manager &&
                                   *model.group_scheme->manager == e.name;
    }
    return model;
}

ServiceModel canonical(ServiceModel model) {
    std::sort(model.entities.begin(), model.entities.end(),
              [](const Entity& a, const Entity& b) { return entity_key(a) < entity_key(b); });
    for (auto& p : model.pii_items) std::sort(p.record_holders.begin(), p.record_holders.end());
    std::sort(model.pii_items.begin(), model.pii_items.end(), [](const PiiItem& a, const PiiItem& b) {
        return std::tie(a.name, a.subject, a.resolvability, a.persistence, a.record_holders,
                        a.authority_managed) <
               std::tie(b.name, b.subject, b.resolvability, b.persistence, b.record_holders,
                        b.authority_managed);
    });
    std::sort(model.exposures.begin(), model.exposures.end(),
              [](const ExposureFact& a, const ExposureFact& b) { return exposure_key(a) < exposure_key(b); });
    std::sort(model.attachments.begin(), model.attachments.end(),
              [](const IoiAttachment& a, const IoiAttachment& b) {
                  return attachment_key(a) < attachment_key(b);
              });
    return model;
}

std::vector<std::string> role_names(const ServiceModel& model) {
    std::vector<std::string> out;
    for (const auto& e : model.entities) {
        if (e.is_role) out.push_back(e.name);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_builtin_name(std::string_view name) { return name == kPublicEntity || name == kOutsideEntity; }

bool is_keyword(std::string_view word) {
    return std::find(std::begin(kKeywords), std::end(kKeywords), word) != std::end(kKeywords);
}

bool is_valid_identifier(std::string_view word) {
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (word.empty() || !alpha(word.front())) return false;
    for (char c : word) {
        if (!alpha(c) && !digit(c) && c != '_') return false;
    }
    return !is_keyword(word);
}

}  // namespace anonlevel

#pragma once

// Domain types describing one anonymity service: who takes part, which
// personally identifiable information (PII) exists, and who can observe it
// under which circumstances.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anonlevel/enum_names.hpp"

namespace anonlevel {

inline constexpr std::string_view kPublicEntity = "@public";
inline constexpr std::string_view kOutsideEntity = "@outside";

enum class EntityKind { participant, ttp, dtp, public_, outside };

template <>
struct EnumNames<EntityKind> {
    static constexpr std::array<std::pair<EntityKind, std::string_view>, 5> names{{
        {EntityKind::participant, "participant"},
        {EntityKind::ttp, "ttp"},
        {EntityKind::dtp, "dtp"},
        {EntityKind::public_, "public"},
        {EntityKind::outside, "outside"},
    }};
};

struct Entity {
    std::string name;
    EntityKind kind = EntityKind::participant;
    /// Stands for a participant role whose general representative can be
    /// chosen as observee.
    bool is_role = false;
    bool declared_group_manager = false;

    friend bool operator==(const Entity&, const Entity&) = default;
};

enum class Resolvability { direct, indirect, unresolvable };

template <>
struct EnumNames<Resolvability> {
    static constexpr std::array<std::pair<Resolvability, std::string_view>, 3> names{{
        {Resolvability::direct, "direct"},
        {Resolvability::indirect, "indirect"},
        {Resolvability::unresolvable, "unresolvable"},
    }};
};

enum class Persistence { persistent, mutable_, transaction };

template <>
struct EnumNames<Persistence> {
    static constexpr std::array<std::pair<Persistence, std::string_view>, 3> names{{
        {Persistence::persistent, "persistent"},
        {Persistence::mutable_, "mutable"},
        {Persistence::transaction, "transaction"},
    }};
};

struct PiiItem {
    std::string name;
    /// Name of the role entity this PII identifies.
    std::string subject;
    Resolvability resolvability = Resolvability::direct;
    Persistence persistence = Persistence::persistent;
    /// Parties holding the PII record that maps the value to an individual.
    std::vector<std::string> record_holders;
    bool authority_managed = false;

    bool resolvable() const { return resolvability != Resolvability::unresolvable; }

    friend bool operator==(const PiiItem&, const PiiItem&) = default;
};

enum class Form { plain, encoded, encrypted_recoverable, encrypted_sealed, hashed };

template <>
struct EnumNames<Form> {
    static constexpr std::array<std::pair<Form, std::string_view>, 5> names{{
        {Form::plain, "plain"},
        {Form::encoded, "encoded"},
        {Form::encrypted_recoverable, "encrypted_recoverable"},
        {Form::encrypted_sealed, "encrypted_sealed"},
        {Form::hashed, "hashed"},
    }};
};

enum class Trigger { always, on_fraud, on_disobedience, on_expiry };

template <>
struct EnumNames<Trigger> {
    static constexpr std::array<std::pair<Trigger, std::string_view>, 4> names{{
        {Trigger::always, "always"},
        {Trigger::on_fraud, "on_fraud"},
        {Trigger::on_disobedience, "on_disobedience"},
        {Trigger::on_expiry, "on_expiry"},
    }};
};

enum class Channel { data, context };

template <>
struct EnumNames<Channel> {
    static constexpr std::array<std::pair<Channel, std::string_view>, 2> names{{
        {Channel::data, "data"},
        {Channel::context, "context"},
    }};
};

/// `observer` can see `pii` in `form` whenever `when` holds, through `via`.
struct ExposureFact {
    std::string observer;
    std::string pii;
    Form form = Form::plain;
    Trigger when = Trigger::always;
    Channel via = Channel::data;

    friend bool operator==(const ExposureFact&, const ExposureFact&) = default;
};

/// PII bound to items of interest that only becomes recoverable once
/// `recoverable_on` fires. Always carried in the data channel.
struct IoiAttachment {
    std::string pii;
    Form form = Form::plain;
    Trigger recoverable_on = Trigger::on_fraud;

    friend bool operator==(const IoiAttachment&, const IoiAttachment&) = default;
};

/// Conditions 1-3 of a group scheme are declared; the fourth (no
/// unconditional recognisability or linkability) is derived.
struct GroupSchemeDecl {
    bool operates_on_groups = false;
    bool group_authentication = false;
    bool acts_on_behalf = false;
    std::optional<std::string> manager;

    friend bool operator==(const GroupSchemeDecl&, const GroupSchemeDecl&) = default;
};

struct ServiceModel {
    std::string name;
    std::vector<Entity> entities;
    std::vector<PiiItem> pii_items;
    std::vector<ExposureFact> exposures;
    std::vector<IoiAttachment> attachments;
    std::optional<GroupSchemeDecl> group_scheme;

    const Entity* find_entity(std::string_view entity_name) const;
    const PiiItem* find_pii(std::string_view pii_name) const;

    /// Structural equality: declaration order and record-holder order are
    /// irrelevant.
    friend bool operator==(const ServiceModel& a, const ServiceModel& b);
};

/// The two implicit entities every model carries.
std::vector<Entity> builtin_entities();

/// Adds the built-ins (if missing) and recomputes `declared_group_manager`
/// flags from the group scheme. Handy for building models in code.
ServiceModel with_builtins(ServiceModel model);

/// Sorted copy used for structural comparison and serialisation.
ServiceModel canonical(ServiceModel model);

/// Names of role entities, sorted.
std::vector<std::string> role_names(const ServiceModel& model);

bool is_builtin_name(std::string_view name);

/// Reserved words of the service-description language.
bool is_keyword(std::string_view word);

/// `[A-Za-z][A-Za-z0-9_]*` and not a keyword.
bool is_valid_identifier(std::string_view word);

}  // namespace anonlevel

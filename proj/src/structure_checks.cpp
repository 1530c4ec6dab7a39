#include "structure_checks.hpp"

#include <map>
#include <set>

#include "ca2oo/naming.hpp"

namespace ca2oo::detail {

namespace {

std::string item_name(const Item& item) {
    if (const auto* f = std::get_if<Field>(&item)) return f->name;
    if (const auto* a = std::get_if<Box<Aggregation>>(&item)) return (*a)->name;
    return std::get<Iteration>(item).name;
}

SourceLoc item_loc(const Item& item) {
    if (const auto* f = std::get_if<Field>(&item)) return f->loc;
    if (const auto* a = std::get_if<Box<Aggregation>>(&item)) return (*a)->loc;
    return std::get<Iteration>(item).loc;
}

void check_field(const Field& f, std::string_view where, Diagnostics& out) {
    const std::string ctx = where.empty() ? std::string() : " in event " + std::string(where);
    if (f.affected && !f.is_reference()) {
        out.push_back(make_error("E-FIELD", "field " + f.name + ctx + " is marked affected but is not a reference", f.loc));
    }
    if (f.init && f.is_reference()) {
        out.push_back(make_error("E-FIELD", "reference field " + f.name + ctx + " cannot have an init expression", f.loc));
    }
    if (f.size) {
        if (f.domain.kind != Domain::Kind::text) {
            out.push_back(make_error("E-FIELD", "field " + f.name + ctx + " has a size but its domain is " +
                                                    to_string(f.domain.kind) + ", not text",
                                     f.loc));
        } else if (*f.size < 1) {
            out.push_back(make_error("E-FIELD", "field " + f.name + ctx + " must have a positive size", f.loc));
        }
    }
    if (f.domain.kind == Domain::Kind::enumeration) {
        std::set<std::string> distinct;
        for (const auto& l : f.domain.literals) {
            if (!distinct.insert(naming::key(l)).second) {
                out.push_back(make_error("E-FIELD", "enum literal '" + l + "' repeated in field " + f.name + ctx, f.loc));
            }
        }
        if (distinct.size() < 2) {
            out.push_back(make_error("E-FIELD", "enum field " + f.name + ctx + " needs at least two distinct literals", f.loc));
        }
    }
}

void check_aggregation(const Aggregation& agg, std::string_view where, Diagnostics& out) {
    std::set<std::string> names;
    for (const auto& item : agg.items) {
        const std::string name = item_name(item);
        if (!names.insert(naming::key(name)).second) {
            out.push_back(make_error("E-DUP", "duplicate name '" + name + "' in " +
                                                  (agg.name.empty() ? std::string("iteration body") : agg.name),
                                     item_loc(item)));
        }
        if (const auto* f = std::get_if<Field>(&item)) {
            check_field(*f, where, out);
        } else if (const auto* a = std::get_if<Box<Aggregation>>(&item)) {
            check_aggregation(**a, where, out);
        } else {
            check_aggregation(*std::get<Iteration>(item).body, where, out);
        }
    }
}

// Data fields of the scope aggregation, by key.
const Field* find_data_field(const Aggregation& agg, std::string_view name) {
    for (const Field* f : data_fields(agg)) {
        if (naming::key(f->name) == naming::key(name)) return f;
    }
    return nullptr;
}

void check_field_annotation(const CommunicativeEvent& ev, const BusinessObjectRegistry& reg, const FieldRef& target,
                            std::string_view clause, SourceLoc loc, Diagnostics& out) {
    const Aggregation* scope = annotation_scope(ev, reg, target.object);
    if (scope == nullptr) {
        out.push_back(make_error("E-UNRESOLVED", std::string(clause) + " annotation names object '" + target.object +
                                                     "', which has no data in event " + ev.id,
                                 loc));
        return;
    }
    if (find_data_field(*scope, target.field) == nullptr) {
        out.push_back(make_error("E-UNRESOLVED", std::string(clause) + " annotation names unknown field " + target.object +
                                                     "." + target.field + " in event " + ev.id,
                                 loc));
    }
}

}  // namespace

Diagnostics check_message(const MessageStructure& ms, std::string_view event_id) {
    Diagnostics out;
    check_aggregation(ms.root, event_id, out);
    return out;
}

Diagnostics check_structure(const RequirementsModel& model) {
    Diagnostics out;

    std::map<std::string, const Process*> processes;
    for (const auto& p : model.processes) {
        if (!processes.emplace(naming::key(p.acronym), &p).second) {
            out.push_back(make_error("E-DUP", "duplicate process acronym " + p.acronym, p.loc));
        }
    }
    std::map<std::string, const CommunicativeEvent*> events;
    for (const auto& e : model.events) {
        if (!events.emplace(naming::key(e.id), &e).second) {
            out.push_back(make_error("E-DUP", "duplicate event id " + e.id, e.loc));
        }
    }

    BusinessObjectRegistry registry;
    for (const auto& e : model.events) {
        for (const auto& r : e.registrations) {
            auto [it, fresh] = registry.emplace(naming::key(r.object), RegistryEntry{r.object, e.id, r.path});
            if (!fresh) {
                out.push_back(make_error("E-DUP", "business object " + r.object + " is registered by both " +
                                                      it->second.event_id + " and " + e.id,
                                         r.loc));
            }
            if (find_aggregation(e.message, r.path) == nullptr) {
                out.push_back(make_error("E-UNRESOLVED", "registers " + r.object + ": path " + join_path(r.path) +
                                                             " does not name an aggregation of event " + e.id,
                                         r.loc));
            }
        }
    }

    for (const auto& e : model.events) {
        if (!e.process.empty() && processes.count(naming::key(e.process)) == 0) {
            out.push_back(make_error("E-UNRESOLVED", "event " + e.id + " belongs to undeclared process " + e.process, e.loc));
        }
        for (const auto& edge : e.precedes) {
            if (events.count(naming::key(edge.to)) == 0) {
                out.push_back(make_error("E-UNRESOLVED", "precedes " + edge.to + ": no such event", edge.loc));
            } else if (naming::key(edge.to) == naming::key(e.id)) {
                out.push_back(make_error("E-EVENT", "event " + e.id + " cannot precede itself", edge.loc));
            }
        }

        auto msg = check_message(e.message, e.id);
        out.insert(out.end(), msg.begin(), msg.end());
        auto resolved = resolve_references(e.message, registry);
        out.insert(out.end(), resolved.diagnostics.begin(), resolved.diagnostics.end());

        int affected = 0;
        for (const Field* f : all_fields(e.message)) {
            if (f->affected && f->is_reference()) ++affected;
        }
        if (!e.is_creation()) {
            if (affected != 1) {
                out.push_back(make_error("E-EVENT", "extension event " + e.id + " must mark exactly one reference field affected (found " +
                                                        std::to_string(affected) + ")",
                                         e.loc));
            } else if (affected_field(e) == nullptr) {
                out.push_back(make_error("E-EVENT", "the affected field of event " + e.id + " must be in the root aggregation", e.loc));
            }
        } else if (affected != 0) {
            out.push_back(make_error("E-EVENT", "creation event " + e.id + " cannot have an affected field", e.loc));
        }

        for (const auto& r : e.restrictions) {
            std::visit(
                [&](const auto& payload) {
                    using T = std::decay_t<decltype(payload)>;
                    if constexpr (std::is_same_v<T, IdentifiedBy>) {
                        for (const auto& field : payload.fields) {
                            check_field_annotation(e, registry, FieldRef{payload.object, field}, "identified-by", r.loc, out);
                        }
                    } else if constexpr (std::is_same_v<T, CardinalityRestriction>) {
                        for (const auto* end : {&payload.first, &payload.second}) {
                            if (registry.count(naming::key(end->object)) == 0) {
                                out.push_back(make_error("E-UNRESOLVED",
                                                         "cardinality names unknown business object '" + end->object + "'", r.loc));
                            }
                        }
                    } else {
                        check_field_annotation(e, registry, payload.target, to_string(r.kind()), r.loc, out);
                    }
                },
                r.payload);
        }
    }
    return out;
}

}  // namespace ca2oo::detail

#include <set>

#include "ca2oo/derivation.hpp"
#include "ca2oo/error.hpp"
#include "ca2oo/event_ordering.hpp"
#include "ca2oo/naming.hpp"
#include "ca2oo/requirements.hpp"
#include "event_plan.hpp"
#include "structure_checks.hpp"

namespace ca2oo {

namespace {

std::string card_text(const CardinalityEnd& e) {
    return std::to_string(e.min) + ":" + (e.max ? std::to_string(*e.max) : std::string("M"));
}

// Data fields that become attributes, each with the object whose annotations apply.
std::vector<std::pair<std::string, const Field*>> attribute_fields(const CommunicativeEvent& e,
                                                                   const detail::EventPlan& plan) {
    std::vector<std::pair<std::string, const Field*>> out;
    if (e.is_creation()) {
        for (const auto& c : plan.classes) {
            for (const Field* f : data_fields(*c.aggregation)) out.emplace_back(c.object, f);
        }
    } else if (plan.affected != nullptr) {
        for (const Field* f : plan.attributes) out.emplace_back(plan.affected->domain.object, f);
        for (const auto& c : plan.carriers) {
            for (const Field* f : c.data) out.emplace_back(c.ref->domain.object, f);
        }
    }
    return out;
}

// Identifier attributes are constant and non-null whatever the annotations say.
void check_identifier_annotations(const CommunicativeEvent& e, const std::string& object, const Field& f,
                                  Diagnostics& out) {
    const auto* id = detail::find_identifier(e, object);
    if (id == nullptr) return;
    bool member = false;
    for (const auto& name : id->fields) member = member || detail::same_name(name, f.name);
    if (!member) return;
    const std::string where = naming::class_name(object) + "." + naming::attribute_name(f.name);
    const auto* kind = detail::find_field_annotation<KindRestriction>(e, object, f.name);
    if (kind != nullptr && kind->kind == AttributeKind::variable) {
        out.push_back(make_error("E-KIND", "identifier attribute " + where + " cannot be variable", f.loc));
    }
    const auto* nulls = detail::find_field_annotation<NullsRestriction>(e, object, f.name);
    if (nulls != nullptr && nulls->allowed) {
        out.push_back(make_error("E-NULLS", "identifier attribute " + where + " cannot allow nulls", f.loc));
    }
}

void check_fields(const CommunicativeEvent& e, const detail::EventPlan& plan, Diagnostics& out) {
    for (const auto& [object, f] : attribute_fields(e, plan)) {
        std::optional<DataType> type;
        try {
            type = map_domain(f->domain, f->op);
        } catch (const Error& err) {
            auto d = err.diagnostic();
            d.loc = f->loc;
            out.push_back(std::move(d));
            continue;
        }
        const auto* override = detail::find_field_annotation<TypeRestriction>(e, object, f->name);
        if (override != nullptr) type = override->type;
        const auto* size = detail::find_field_annotation<SizeRestriction>(e, object, f->name);
        const std::string where = object + "." + f->name;
        if (*type != DataType::string) {
            if (size != nullptr || f->size) {
                out.push_back(make_error("E-FIELD", "size given for " + where + ", whose type is " + to_string(*type) +
                                                        "; sizes apply to String only",
                                         f->loc));
            }
        } else if (size != nullptr && size->size < 1) {
            out.push_back(make_error("E-FIELD", "size of " + where + " must be positive", f->loc));
        } else if (size == nullptr && !f->size && f->domain.kind != Domain::Kind::enumeration) {
            out.push_back(make_warning("W-NO-SIZE", "no size declared for " + where + "; default String(100) will be used",
                                       f->loc));
        }
        if (e.is_creation()) {
            check_identifier_annotations(e, object, *f, out);
        } else {
            for (const auto& r : e.restrictions) {
                const FieldRef* target = nullptr;
                if (const auto* k = std::get_if<KindRestriction>(&r.payload)) target = &k->target;
                if (const auto* n = std::get_if<NullsRestriction>(&r.payload)) target = &n->target;
                if (target != nullptr && detail::same_name(target->object, object) &&
                    detail::same_name(target->field, f->name)) {
                    out.push_back(make_warning("W-IGNORED", to_string(r.kind()) + " annotation on " + where +
                                                                " is ignored: attributes added by an extension are "
                                                                "always variable and nullable",
                                               r.loc));
                }
            }
        }
    }
}

void check_cardinalities(const CommunicativeEvent& e, const detail::EventPlan& plan, Diagnostics& out) {
    std::set<const CardinalityRestriction*> matched;
    for (const auto& rel : plan.relationships) {
        const auto m = detail::find_cardinality(e, rel.one_object, rel.many_object);
        if (m.restriction != nullptr) {
            matched.insert(m.restriction);
            continue;
        }
        if (!e.is_creation()) continue;  // extension links are always 0:1 -- 0:M
        out.push_back(make_warning("W-NO-CARD", "no cardinality declared for " + rel.one_object + " -- " +
                                                    rel.many_object + "; default 1:1 -- 0:M will be used",
                                   rel.loc));
    }
    for (const auto& r : e.restrictions) {
        const auto* c = std::get_if<CardinalityRestriction>(&r.payload);
        if (c == nullptr) continue;
        for (const auto* end : {&c->first, &c->second}) {
            if (end->min != 0 && end->min != 1) {
                out.push_back(make_error("E-CARD", "minimum cardinality of " + end->object + " must be 0 or 1, not " +
                                                       std::to_string(end->min),
                                         r.loc));
            }
            if (end->max && *end->max != 1) {
                out.push_back(make_error("E-CARD", "maximum cardinality of " + end->object + " must be 1 or M, not " +
                                                       std::to_string(*end->max),
                                         r.loc));
            }
        }
        if (matched.count(c) == 0) {
            out.push_back(make_error("E-CARD", "cardinality " + c->first.object + " " + card_text(c->first) + " -- " +
                                                   card_text(c->second) + " " + c->second.object +
                                                   " matches no relationship derived from event " + e.id,
                                     r.loc));
        }
    }
}

}  // namespace

Diagnostics validate(const RequirementsModel& model) {
    Diagnostics out = detail::check_structure(model);
    const auto registry = model.registry();

    auto poset = remove_loopbacks(full_diagram(model));
    out.insert(out.end(), poset.diagnostics.begin(), poset.diagnostics.end());

    for (const auto& e : model.events) {
        if (all_fields(e.message).empty()) {
            out.push_back(make_error("E-EVENT", "event " + e.id + " has an empty message", e.loc));
            continue;
        }
        const auto plan = detail::plan_event(e, registry);
        out.insert(out.end(), plan.errors.begin(), plan.errors.end());
        check_fields(e, plan, out);
        check_cardinalities(e, plan, out);

        if (e.is_creation()) {
            for (const auto& c : plan.classes) {
                if (detail::find_identifier(e, c.object) == nullptr) {
                    out.push_back(make_warning("W-NO-ID", "no identifier declared for " + naming::class_name(c.object) +
                                                              "; generated surrogate id will be used",
                                               c.loc));
                }
            }
            std::set<std::string> seen;
            for (const auto& r : e.restrictions) {
                if (const auto* id = std::get_if<IdentifiedBy>(&r.payload);
                    id != nullptr && !seen.insert(naming::key(id->object)).second) {
                    out.push_back(make_error("E-DUP", "more than one identifier declared for " + id->object, r.loc));
                }
            }
            if (e.reaction.end_of_editing.value_or(false) && plan.classes.size() == 1) {
                out.push_back(make_warning("W-EOE", "end-of-editing requested for single-class event " + e.id +
                                                         "; no end-of-editing service will be derived",
                                           e.reaction.loc));
            }
        }

        // References to objects whose owning event does not precede this one.
        const auto before = ancestors(poset.value, e.id);
        for (const Field* f : all_fields(e.message)) {
            if (!f->is_reference()) continue;
            auto it = registry.find(naming::key(f->domain.object));
            if (it == registry.end() || detail::same_name(it->second.event_id, e.id)) continue;
            bool preceded = false;
            for (const auto& a : before) preceded = preceded || detail::same_name(a, it->second.event_id);
            if (!preceded) {
                out.push_back(make_warning("W-FORWARD-REF", "field " + f->name + " of event " + e.id + " references " +
                                                                it->second.object + ", registered by " +
                                                                it->second.event_id + ", which does not precede it",
                                           f->loc));
            }
        }
    }
    sort_diagnostics(out);
    return out;
}

}  // namespace ca2oo

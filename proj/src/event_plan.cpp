#include "event_plan.hpp"

#include <map>

#include "ca2oo/naming.hpp"

namespace ca2oo::detail {

bool same_name(std::string_view a, std::string_view b) { return naming::key(a) == naming::key(b); }

namespace {

bool is_bare_nested(const AggregationRef& ref) {
    return ref.depth > 0 && (ref.via_iteration == nullptr || &*ref.via_iteration->body != ref.aggregation);
}

std::string display(const Aggregation& agg) { return agg.name.empty() ? std::string("(anonymous)") : agg.name; }

void plan_creation(const CommunicativeEvent& e, EventPlan& plan) {
    std::map<const Aggregation*, const Registration*> registered;
    for (const auto& r : e.registrations) {
        if (const Aggregation* a = find_aggregation(e.message, r.path)) registered.emplace(a, &r);
    }
    if (e.registrations.empty()) {
        plan.errors.push_back(make_error("E-EVENT", "creation event " + e.id + " registers no business object", e.loc));
    }
    const auto refs = aggregations_in_document_order(e.message);
    for (const auto& ref : refs) {
        if (is_bare_nested(ref)) {
            plan.errors.push_back(make_error("E-EVENT",
                                             "nested aggregation " + display(*ref.aggregation) + " in event " + e.id +
                                                 " is not inside an iteration; this shape is not supported",
                                             ref.aggregation->loc));
            continue;
        }
        auto it = registered.find(ref.aggregation);
        if (it == registered.end()) {
            plan.errors.push_back(make_error("E-EVENT",
                                             "aggregation " + display(*ref.aggregation) + " of creation event " + e.id +
                                                 " is not registered as a business object",
                                             ref.aggregation->loc));
            continue;
        }
        plan.classes.push_back(PlannedClass{it->second->object, ref.aggregation, ref.path, it->second->loc});
    }
    for (const auto& ref : refs) {
        auto owner = registered.find(ref.aggregation);
        if (owner == registered.end() || is_bare_nested(ref)) continue;
        for (const auto& item : ref.aggregation->items) {
            if (const auto* f = std::get_if<Field>(&item); f != nullptr && f->is_reference()) {
                plan.relationships.push_back(PlannedRelationship{RelationshipSource::reference, f->domain.object,
                                                                 owner->second->object, f, ref.path, f->loc});
            } else if (const auto* iter = std::get_if<Iteration>(&item)) {
                auto child = registered.find(&*iter->body);
                if (child == registered.end()) continue;
                auto path = ref.path;
                path.push_back(iter->name);
                plan.relationships.push_back(PlannedRelationship{RelationshipSource::iteration, owner->second->object,
                                                                 child->second->object, nullptr, path, iter->loc});
            }
        }
    }
}

void plan_extension(const CommunicativeEvent& e, const BusinessObjectRegistry& registry, EventPlan& plan) {
    if (!e.registrations.empty()) {
        plan.errors.push_back(make_error("E-EVENT", "extension event " + e.id + " cannot register business objects",
                                         e.registrations.front().loc));
    }
    plan.affected = affected_field(e);
    if (plan.affected == nullptr) return;  // reported by the structural checks
    const std::string affected_object = plan.affected->domain.object;
    auto owner = registry.find(naming::key(affected_object));
    const std::vector<std::string> root_path{e.message.root.name};

    for (const auto& item : e.message.root.items) {
        if (const auto* f = std::get_if<Field>(&item)) {
            if (f == plan.affected) continue;
            if (f->is_reference()) {
                plan.relationships.push_back(PlannedRelationship{RelationshipSource::reference, f->domain.object,
                                                                 affected_object, f, root_path, f->loc});
            } else {
                plan.attributes.push_back(f);
            }
        } else if (const auto* nested = std::get_if<Box<Aggregation>>(&item)) {
            plan.errors.push_back(make_error("E-EVENT",
                                             "nested aggregation " + (*nested)->name + " in extension event " + e.id +
                                                 " is not supported",
                                             (*nested)->loc));
        } else {
            const auto& iter = std::get<Iteration>(item);
            const Aggregation& body = *iter.body;
            Carrier c;
            c.body = &body;
            c.path = root_path;
            c.path.push_back(iter.name);
            if (!body.name.empty()) c.path.push_back(body.name);
            c.loc = iter.loc;
            std::string problem;
            for (const auto& inner : body.items) {
                const auto* f = std::get_if<Field>(&inner);
                if (f == nullptr) {
                    problem = "it contains nested substructures";
                    break;
                }
                if (f->is_reference()) {
                    if (c.ref != nullptr) {
                        problem = "it has more than one reference field";
                        break;
                    }
                    c.ref = f;
                } else {
                    c.data.push_back(f);
                }
            }
            if (problem.empty() && c.ref == nullptr) problem = "it has no reference field";
            if (problem.empty() && c.data.empty()) problem = "it has no data fields";
            if (problem.empty()) {
                auto target = registry.find(naming::key(c.ref->domain.object));
                if (target != registry.end() && owner != registry.end() &&
                    !same_name(target->second.event_id, owner->second.event_id)) {
                    problem = "its reference " + c.ref->name + " names " + target->second.object +
                              ", which is not registered together with " + owner->second.object;
                }
            }
            if (!problem.empty()) {
                plan.errors.push_back(make_error("E-EVENT", "iteration " + iter.name + " in extension event " + e.id +
                                                                " is not supported: " + problem,
                                                 iter.loc));
                continue;
            }
            plan.carriers.push_back(std::move(c));
        }
    }
    if (plan.attributes.empty() && plan.relationships.empty() && plan.carriers.empty() && plan.errors.empty()) {
        plan.errors.push_back(
            make_error("E-EVENT", "extension event " + e.id + " adds no attributes or relationships", e.loc));
    }
}

}  // namespace

EventPlan plan_event(const CommunicativeEvent& event, const BusinessObjectRegistry& registry) {
    EventPlan plan;
    if (event.is_creation()) {
        plan_creation(event, plan);
    } else {
        plan_extension(event, registry, plan);
    }
    return plan;
}

CardinalityMatch find_cardinality(const CommunicativeEvent& event, std::string_view one, std::string_view many) {
    for (const auto& r : event.restrictions) {
        const auto* c = std::get_if<CardinalityRestriction>(&r.payload);
        if (c == nullptr) continue;
        if (same_name(c->first.object, one) && same_name(c->second.object, many)) return {c, &c->first, &c->second, r.loc};
        if (same_name(c->second.object, one) && same_name(c->first.object, many)) return {c, &c->second, &c->first, r.loc};
    }
    return {};
}

const IdentifiedBy* find_identifier(const CommunicativeEvent& event, std::string_view object) {
    for (const auto& r : event.restrictions) {
        if (const auto* id = std::get_if<IdentifiedBy>(&r.payload); id != nullptr && same_name(id->object, object)) {
            return id;
        }
    }
    return nullptr;
}

template <typename T>
const T* find_field_annotation(const CommunicativeEvent& event, std::string_view object, std::string_view field) {
    for (const auto& r : event.restrictions) {
        if (const auto* p = std::get_if<T>(&r.payload);
            p != nullptr && same_name(p->target.object, object) && same_name(p->target.field, field)) {
            return p;
        }
    }
    return nullptr;
}

template const SizeRestriction* find_field_annotation<SizeRestriction>(const CommunicativeEvent&, std::string_view,
                                                                       std::string_view);
template const NullsRestriction* find_field_annotation<NullsRestriction>(const CommunicativeEvent&, std::string_view,
                                                                         std::string_view);
template const KindRestriction* find_field_annotation<KindRestriction>(const CommunicativeEvent&, std::string_view,
                                                                       std::string_view);
template const TypeRestriction* find_field_annotation<TypeRestriction>(const CommunicativeEvent&, std::string_view,
                                                                       std::string_view);

}  // namespace ca2oo::detail

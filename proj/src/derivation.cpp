#include "ca2oo/derivation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ca2oo/error.hpp"
#include "ca2oo/event_ordering.hpp"
#include "ca2oo/naming.hpp"
#include "ca2oo/service_derivation.hpp"
#include "event_plan.hpp"

namespace ca2oo {

namespace {

using detail::same_name;

constexpr int kDefaultStringSize = 100;

std::string source(const CommunicativeEvent& e, const std::vector<std::string>& path, std::string_view field = {}) {
    std::string out = e.id + "/" + join_path(path);
    if (!field.empty()) out += "." + std::string(field);
    return out;
}

std::string card(const RelationshipEnd& e) {
    return std::to_string(e.min) + ":" + (e.max ? std::to_string(*e.max) : std::string("M"));
}

std::string normalize_init(const std::string& init) {
    std::string squashed;
    for (char c : init) {
        if (c != ' ') squashed.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (squashed == "today()" || squashed == "systemdate()") return "systemDate()";
    return init;
}

const Class* class_for_object(const ConceptualModel& model, std::string_view object) {
    for (const auto& c : model.classes) {
        if (same_name(c.object, object)) return &c;
    }
    return nullptr;
}

// Type, size, default and literals; kind/id/nulls/requested are left to the caller.
Attribute base_attribute(const Field& f, const CommunicativeEvent& e, const std::string& object, const std::string& cls,
                         const std::string& src, DerivationTrace* trace) {
    Attribute a;
    a.name = naming::attribute_name(f.name);
    a.data_type = map_domain(f.domain, f.op);
    if (const auto* t = detail::find_field_annotation<TypeRestriction>(e, object, f.name)) a.data_type = t->type;
    const auto* size = detail::find_field_annotation<SizeRestriction>(e, object, f.name);
    if (a.data_type == DataType::string) {
        if (size != nullptr) {
            a.size = size->size;
        } else if (f.size) {
            a.size = f.size;
        } else if (f.domain.kind == Domain::Kind::enumeration) {
            std::size_t longest = 1;
            for (const auto& l : f.domain.literals) longest = std::max(longest, naming::utf8_length(l));
            a.size = static_cast<int>(longest);
        } else {
            a.size = kDefaultStringSize;
            if (trace != nullptr) {
                trace->push_back(TraceRecord{"R-DEFAULT", e.id, src, "attribute", cls + "." + a.name,
                                             "D14: no size declared; String(100)"});
            }
        }
    } else if (size != nullptr || f.size) {
        throw Error("E-FIELD", "size given for " + object + "." + f.name + ", whose type is " + to_string(a.data_type),
                    f.loc);
    }
    if (f.init) a.default_value = normalize_init(*f.init);
    a.enum_literals = f.domain.literals;
    a.origin = Origin{e.id, 0};
    return a;
}

Class class_from_aggregation(const Aggregation& agg, const CommunicativeEvent& event, const std::string& object,
                             const std::vector<std::string>& path, DerivationTrace* trace) {
    Class cls;
    cls.name = naming::class_name(object);
    cls.object = object;
    cls.origin = Origin{event.id, 0};

    const IdentifiedBy* id = detail::find_identifier(event, object);
    std::set<std::string> id_fields;
    if (id != nullptr) {
        for (const auto& f : id->fields) id_fields.insert(naming::key(f));
    } else {
        Attribute a;
        a.name = naming::snake_case(cls.name) + "_id";
        a.is_id = true;
        a.kind = AttributeKind::constant;
        a.data_type = DataType::autonumeric;
        a.requested = true;
        a.nulls_allowed = false;
        a.origin = Origin{event.id, 0};
        if (trace != nullptr) {
            trace->push_back(TraceRecord{"R-ATTR", event.id, source(event, path), "attribute", cls.name + "." + a.name,
                                         "surrogate identifier"});
            trace->push_back(TraceRecord{"R-DEFAULT", event.id, source(event, path), "attribute",
                                         cls.name + "." + a.name, "D3: no identifier declared; surrogate id"});
        }
        cls.attributes.push_back(std::move(a));
    }

    std::set<std::string> matched_ids;
    for (const Field* f : data_fields(agg)) {
        const std::string src = source(event, path, f->name);
        DerivationTrace defaults;
        Attribute a = base_attribute(*f, event, object, cls.name, src, &defaults);
        a.requested = true;
        a.is_id = id_fields.count(naming::key(f->name)) != 0;
        if (a.is_id) matched_ids.insert(naming::key(f->name));
        const auto* kind = detail::find_field_annotation<KindRestriction>(event, object, f->name);
        const auto* nulls = detail::find_field_annotation<NullsRestriction>(event, object, f->name);
        std::string note;
        if (a.is_id) {
            if (kind != nullptr && kind->kind == AttributeKind::variable) {
                throw Error("E-KIND", "identifier attribute " + cls.name + "." + a.name + " cannot be variable", f->loc);
            }
            if (nulls != nullptr && nulls->allowed) {
                throw Error("E-NULLS", "identifier attribute " + cls.name + "." + a.name + " cannot allow nulls", f->loc);
            }
            a.kind = AttributeKind::constant;
            a.nulls_allowed = false;
            note = "identifier";
        } else {
            if (kind != nullptr) {
                a.kind = kind->kind;
                note = "kind from annotation";
            } else if (f->init) {
                a.kind = AttributeKind::constant;
                note = "initialised: constant";
            } else {
                a.kind = AttributeKind::variable;
            }
            a.nulls_allowed = nulls == nullptr || nulls->allowed;
        }
        if (cls.find_attribute(a.name) != nullptr) {
            throw Error("E-DUP", "attribute " + a.name + " appears twice in class " + cls.name, f->loc);
        }
        if (trace != nullptr) {
            trace->push_back(TraceRecord{"R-ATTR", event.id, src, "attribute", cls.name + "." + a.name, note});
            trace->insert(trace->end(), defaults.begin(), defaults.end());
        }
        cls.attributes.push_back(std::move(a));
    }
    if (id != nullptr && matched_ids.size() != id_fields.size()) {
        throw Error("E-UNRESOLVED", "identifier of " + object + " names a field that is not among its data fields");
    }
    return cls;
}

void apply_annotation(StructuralRelationship& rel, const CommunicativeEvent& event, const std::string& one_object,
                      const std::string& many_object) {
    const auto m = detail::find_cardinality(event, one_object, many_object);
    if (m.restriction == nullptr) return;
    if (m.one->max != std::optional<int>(1) || m.many->max.has_value()) {
        throw Error("E-CARD",
                    "cardinality annotation for " + one_object + " -- " + many_object +
                        " conflicts with the derived maxima (1 on " + one_object + ", M on " + many_object + ")",
                    m.loc);
    }
    if (m.restriction->dynamic && !rel.dynamic) {
        throw Error("E-CARD", "relationship " + one_object + " -- " + many_object + " is established at creation time in " +
                                  event.id + " and cannot be dynamic",
                    m.loc);
    }
    rel.one.min = m.one->min;
    rel.many.min = m.many->min;
    rel.annotated = true;
}

std::string unique_relationship_name(const StructuralRelationship& rel, const ConceptualModel& so_far,
                                     const std::vector<StructuralRelationship>& pending) {
    auto taken = [&](const std::string& n) {
        if (so_far.find_relationship(n) != nullptr) return true;
        return std::any_of(pending.begin(), pending.end(), [&](const auto& r) { return r.name == n; });
    };
    if (!taken(rel.name)) return rel.name;
    return rel.name + "_" + rel.one.role;
}

void record_relationship(const StructuralRelationship& rel, const CommunicativeEvent& event, const std::string& src,
                         DerivationTrace& trace) {
    const std::string rule = rel.source == RelationshipSource::iteration ? "R-ITER-REL" : "R-REF-REL";
    const std::string shape = rel.one.class_name + " " + card(rel.one) + (rel.dynamic ? " dynamic" : "") + " -- " +
                              card(rel.many) + " " + rel.many.class_name;
    trace.push_back(TraceRecord{rule, event.id, src, "relationship", rel.name,
                                shape + (rel.annotated ? "; cardinality from annotation" : "")});
    if (!rel.annotated && event.is_creation()) {
        trace.push_back(TraceRecord{"R-DEFAULT", event.id, src, "relationship", rel.name,
                                    "D11: no cardinality declared; default minima"});
    }
}

template <typename T>
void number(std::vector<T>& items) {
    for (std::size_t i = 0; i < items.size(); ++i) items[i].origin.seq = static_cast<int>(i);
}

ClassExtension& extension_for(ClassDiagramView& view, const std::string& cls) {
    for (auto& x : view.extensions) {
        if (x.class_name == cls) return x;
    }
    view.extensions.push_back(ClassExtension{cls, {}, {}, {}});
    return view.extensions.back();
}

ClassDiagramView derive_creation_view(const CommunicativeEvent& event, const detail::EventPlan& plan,
                                      const ConceptualModel& so_far) {
    ClassDiagramView view;
    view.event_id = event.id;
    const bool multi = plan.classes.size() > 1;

    for (const auto& pc : plan.classes) {
        const std::string name = naming::class_name(pc.object);
        if (so_far.find_class(name) != nullptr) {
            throw Error("E-DUP", "class " + name + " is already derived; " + event.id + " cannot create it again", pc.loc);
        }
        view.trace.push_back(TraceRecord{"R-CLASS", event.id, source(event, pc.path), "class", name,
                                         "registers " + pc.object});
        view.new_classes.push_back(class_from_aggregation(*pc.aggregation, event, pc.object, pc.path, &view.trace));
    }
    auto class_in_view = [&](std::string_view object) -> const Class* {
        for (const auto& c : view.new_classes) {
            if (same_name(c.object, object)) return &c;
        }
        return class_for_object(so_far, object);
    };

    for (const auto& pr : plan.relationships) {
        const Class* one = class_in_view(pr.one_object);
        const Class* many = class_in_view(pr.many_object);
        if (one == nullptr) {
            throw Error("E-FORWARD", "event " + event.id + " references " + pr.one_object + ", which has not been derived yet",
                        pr.loc);
        }
        StructuralRelationship rel =
            pr.source == RelationshipSource::iteration
                ? derive_relationship_from_iteration(one->name, many->name, event, pr.one_object, pr.many_object)
                : derive_relationship_from_reference(*pr.field, many->name, one->name, event, pr.many_object);
        rel.name = unique_relationship_name(rel, so_far, view.relationships);
        record_relationship(rel, event, source(event, pr.path, pr.field != nullptr ? pr.field->name : ""), view.trace);
        view.relationships.push_back(std::move(rel));
    }

    for (std::size_t i = 0; i < view.new_classes.size(); ++i) {
        Class& cls = view.new_classes[i];
        number(cls.attributes);
        Service svc = derive_creation_service(cls, event, multi);
        for (const auto& rel : view.relationships) {
            if (rel.many.class_name != cls.name) continue;
            svc.arguments.push_back(creation_link_argument(rel, event.id, static_cast<int>(svc.arguments.size())));
        }
        const bool reaction = !multi || (i == 0 && !event.reaction.wants_end_of_editing());
        view.trace.push_back(TraceRecord{"R-CRESVC", event.id, source(event, plan.classes[i].path), "service",
                                         cls.name + "." + svc.name, reaction ? std::string(kReactionNote) : ""});
        cls.services.push_back(std::move(svc));
    }
    if (!view.new_classes.empty()) {
        Class& root = view.new_classes.front();
        if (auto eoe = derive_end_of_editing(root, event, multi)) {
            view.trace.push_back(TraceRecord{"R-EOE", event.id, event.id + "/reaction", "service",
                                             root.name + "." + eoe->name, std::string(kReactionNote)});
            root.services.push_back(std::move(*eoe));
        }
    }
    for (auto& cls : view.new_classes) number(cls.services);
    number(view.relationships);
    return view;
}

}  // namespace

DataType map_domain(const Domain& domain, OpCode op) {
    if (op == OpCode::generated && domain.kind != Domain::Kind::number) {
        throw Error("E-DOMAIN", "generated op code requires a number domain, not " + to_string(domain.kind));
    }
    switch (domain.kind) {
        case Domain::Kind::number: return op == OpCode::generated ? DataType::autonumeric : DataType::real;
        case Domain::Kind::text: return DataType::string;
        case Domain::Kind::date: return DataType::date;
        case Domain::Kind::datetime: return DataType::datetime;
        case Domain::Kind::money: return DataType::real;
        case Domain::Kind::enumeration: return DataType::string;
        case Domain::Kind::reference: break;
    }
    throw Error("E-DOMAIN", "reference fields do not map to a data type");
}

Class derive_class_from_aggregation(const Aggregation& agg, const CommunicativeEvent& event, const std::string& object,
                                    DerivationTrace* trace) {
    return class_from_aggregation(agg, event, object, {agg.name}, trace);
}

StructuralRelationship derive_relationship_from_iteration(const std::string& parent_class, const std::string& child_class,
                                                          const CommunicativeEvent& event,
                                                          const std::string& parent_object,
                                                          const std::string& child_object) {
    StructuralRelationship rel;
    rel.source = RelationshipSource::iteration;
    rel.one = RelationshipEnd{parent_class, "", 1, 1};
    rel.many = RelationshipEnd{child_class, "", 0, std::nullopt};
    rel.origin = Origin{event.id, 0};
    apply_annotation(rel, event, parent_object, child_object);
    name_relationship_and_roles(rel);
    return rel;
}

StructuralRelationship derive_relationship_from_reference(const Field& ref_field, const std::string& owning_class,
                                                          const std::string& referenced_class,
                                                          const CommunicativeEvent& event,
                                                          const std::string& owning_object) {
    StructuralRelationship rel;
    rel.source = RelationshipSource::reference;
    rel.dynamic = !event.is_creation();
    rel.one = RelationshipEnd{referenced_class, "", rel.dynamic ? 0 : 1, 1};
    rel.many = RelationshipEnd{owning_class, "", 0, std::nullopt};
    rel.origin = Origin{event.id, 0};
    apply_annotation(rel, event, ref_field.domain.object, owning_object);
    name_relationship_and_roles(rel, &ref_field);
    return rel;
}

void name_relationship_and_roles(StructuralRelationship& rel, const Field* ref_field) {
    rel.name = naming::snake_case(rel.one.class_name) + "_" + naming::snake_case(rel.many.class_name);
    rel.one.role = ref_field != nullptr ? naming::lower(naming::attribute_name(ref_field->name))
                                        : naming::lower(rel.one.class_name);
    const std::string many = naming::lower(rel.many.class_name);
    rel.many.role = rel.many.max ? many : naming::pluralize(many);
}

ClassDiagramView derive_extension_view(const CommunicativeEvent& event, const RequirementsModel& requirements,
                                       const ConceptualModel& so_far) {
    const auto plan = detail::plan_event(event, requirements.registry());
    if (!plan.errors.empty()) throw Error(plan.errors.front().code, plan.errors.front().message, plan.errors.front().loc);

    ClassDiagramView view;
    view.event_id = event.id;
    const std::string affected_object = plan.affected->domain.object;
    const Class* target = class_for_object(so_far, affected_object);
    if (target == nullptr) {
        throw Error("E-FORWARD", "event " + event.id + " extends " + affected_object + ", which has not been derived yet",
                    plan.affected->loc);
    }
    const std::vector<std::string> root_path{event.message.root.name};

    std::vector<Attribute> attrs;
    for (const Field* f : plan.attributes) {
        const std::string src = source(event, root_path, f->name);
        DerivationTrace defaults;
        Attribute a = base_attribute(*f, event, affected_object, target->name, src, &defaults);
        if (target->find_attribute(a.name) != nullptr ||
            std::any_of(attrs.begin(), attrs.end(), [&](const Attribute& x) { return x.name == a.name; })) {
            throw Error("E-DUP", "class " + target->name + " already has an attribute " + a.name, f->loc);
        }
        view.trace.push_back(TraceRecord{"R-EXT-ATTR", event.id, src, "attribute", target->name + "." + a.name, ""});
        view.trace.insert(view.trace.end(), defaults.begin(), defaults.end());
        attrs.push_back(std::move(a));
    }

    std::vector<StructuralRelationship> rels;
    for (const auto& pr : plan.relationships) {
        const Class* referenced = class_for_object(so_far, pr.one_object);
        if (referenced == nullptr) {
            throw Error("E-FORWARD", "event " + event.id + " references " + pr.one_object + ", which has not been derived yet",
                        pr.loc);
        }
        StructuralRelationship rel =
            derive_relationship_from_reference(*pr.field, target->name, referenced->name, event, affected_object);
        rel.name = unique_relationship_name(rel, so_far, rels);
        record_relationship(rel, event, source(event, pr.path, pr.field->name), view.trace);
        rels.push_back(std::move(rel));
    }

    bool loopback_target = false;
    for (const auto& edge : requirements.precedences()) {
        if (edge.loopback && same_name(edge.to, event.id)) loopback_target = true;
    }

    if (!attrs.empty() || !rels.empty()) {
        auto svcs = derive_extension_services(*target, event, attrs, rels, loopback_target);
        ClassExtension& ext = extension_for(view, target->name);
        ext.attributes = attrs;
        for (const auto& s : svcs.services) {
            const bool is_reaction = s.name == svcs.reaction;
            const std::string rule = s.kind == ServiceKind::setter ? "R-SETTER" : "R-SHARED";
            view.trace.push_back(TraceRecord{rule, event.id, event.id + "/reaction", "service", target->name + "." + s.name,
                                             is_reaction ? std::string(kReactionNote) : (s.internal ? "internal" : "")});
        }
        ext.services = svcs.services;
        if (svcs.transaction) {
            view.trace.push_back(TraceRecord{"R-TXN", event.id, event.id + "/reaction", "transaction",
                                             target->name + "." + svcs.transaction->name, std::string(kReactionNote)});
            ext.transactions.push_back(*svcs.transaction);
        }
        for (std::size_t i = 0; i < svcs.referenced_services.size(); ++i) {
            const auto& cls = svcs.referenced_classes[i];
            view.trace.push_back(TraceRecord{"R-SHARED", event.id, event.id + "/reaction", "service",
                                             cls + "." + svcs.referenced_services[i].name, ""});
            extension_for(view, cls).services.push_back(svcs.referenced_services[i]);
        }
        const Service* creation = nullptr;
        for (const auto& s : target->services) {
            if (s.kind == ServiceKind::creation) {
                creation = &s;
                break;
            }
        }
        if (creation != nullptr) {
            for (std::size_t i = 0; i < rels.size(); ++i) {
                Argument arg = creation_link_argument(rels[i], event.id, static_cast<int>(i));
                view.trace.push_back(TraceRecord{"R-CRESVC", event.id, source(event, root_path, plan.relationships[i].field->name),
                                                 "argument", target->name + "." + creation->name + "." + arg.name,
                                                 "object argument for " + rels[i].name});
                view.argument_additions.push_back(ArgumentAddition{target->name, creation->name, std::move(arg)});
            }
        }
    }

    for (std::size_t i = 0; i < plan.carriers.size(); ++i) {
        const auto& c = plan.carriers[i];
        const Class* carried = class_for_object(so_far, c.ref->domain.object);
        if (carried == nullptr) {
            throw Error("E-FORWARD", "event " + event.id + " extends " + c.ref->domain.object + ", which has not been derived yet",
                        c.loc);
        }
        ClassExtension& ext = extension_for(view, carried->name);
        std::vector<Attribute> carried_attrs;
        for (const Field* f : c.data) {
            const std::string src = source(event, c.path, f->name);
            DerivationTrace defaults;
            Attribute a = base_attribute(*f, event, c.ref->domain.object, carried->name, src, &defaults);
            if (carried->find_attribute(a.name) != nullptr ||
                std::any_of(ext.attributes.begin(), ext.attributes.end(), [&](const Attribute& x) { return x.name == a.name; })) {
                throw Error("E-DUP", "class " + carried->name + " already has an attribute " + a.name, f->loc);
            }
            view.trace.push_back(TraceRecord{"R-EXT-ATTR", event.id, src, "attribute", carried->name + "." + a.name,
                                             "carried by " + c.ref->name});
            view.trace.insert(view.trace.end(), defaults.begin(), defaults.end());
            carried_attrs.push_back(a);
            ext.attributes.push_back(std::move(a));
        }
        const bool event_named = i == 0 && plan.attributes.empty() && plan.relationships.empty();
        Service s = derive_carrier_setter(*carried, event, carried_attrs, event_named);
        view.trace.push_back(TraceRecord{"R-SETTER", event.id, source(event, c.path), "service", carried->name + "." + s.name,
                                         event_named ? std::string(kReactionNote) : ""});
        ext.services.push_back(std::move(s));
    }

    for (auto& ext : view.extensions) {
        for (auto& a : ext.attributes) {
            a.is_id = false;
            a.kind = AttributeKind::variable;
            a.requested = false;
            a.nulls_allowed = true;
        }
        number(ext.attributes);
        number(ext.services);
        number(ext.transactions);
    }
    view.relationships = std::move(rels);
    number(view.relationships);
    return view;
}

ClassDiagramView derive_view(const CommunicativeEvent& event, const RequirementsModel& requirements,
                             const ConceptualModel& so_far) {
    if (all_fields(event.message).empty()) throw Error("E-EVENT", "event " + event.id + " has an empty message", event.loc);
    if (!event.is_creation()) return derive_extension_view(event, requirements, so_far);
    const auto plan = detail::plan_event(event, requirements.registry());
    if (!plan.errors.empty()) throw Error(plan.errors.front().code, plan.errors.front().message, plan.errors.front().loc);
    return derive_creation_view(event, plan, so_far);
}

Result<ConceptualModel> integrate_view(const ConceptualModel& model, const ClassDiagramView& view) {
    Result<ConceptualModel> result;
    Diagnostics& errs = result.diagnostics;
    auto dup = [&](const std::string& what) { errs.push_back(make_error("E-DUP", what + " (integrating " + view.event_id + ")")); };

    std::set<std::string> class_names;
    for (const auto& c : model.classes) class_names.insert(c.name);
    for (const auto& c : view.new_classes) {
        if (!class_names.insert(c.name).second) dup("class " + c.name + " already exists");
    }
    for (const auto& ext : view.extensions) {
        const Class* cls = model.find_class(ext.class_name);
        if (cls == nullptr) {
            errs.push_back(make_error("E-UNRESOLVED", "view of " + view.event_id + " extends unknown class " + ext.class_name));
            continue;
        }
        for (const auto& a : ext.attributes) {
            if (cls->find_attribute(a.name) != nullptr) dup("attribute " + ext.class_name + "." + a.name + " already exists");
        }
        for (const auto& s : ext.services) {
            if (cls->has_member(s.name)) dup("service " + ext.class_name + "." + s.name + " already exists");
        }
        for (const auto& t : ext.transactions) {
            if (cls->has_member(t.name)) dup("transaction " + ext.class_name + "." + t.name + " already exists");
        }
    }
    for (const auto& r : view.relationships) {
        if (model.find_relationship(r.name) != nullptr) dup("relationship " + r.name + " already exists");
    }
    for (const auto& add : view.argument_additions) {
        const Class* cls = model.find_class(add.class_name);
        const Service* svc = cls != nullptr ? cls->find_service(add.service) : nullptr;
        if (svc == nullptr) {
            errs.push_back(make_error("E-UNRESOLVED", "view of " + view.event_id + " extends unknown service " +
                                                          add.class_name + "." + add.service));
            continue;
        }
        for (const auto& a : svc->arguments) {
            if (a.name == add.argument.name) dup("argument " + add.service + "." + a.name + " already exists");
        }
    }
    if (!errs.empty()) {
        result.value = model;
        return result;
    }

    ConceptualModel out = model;
    for (const auto& c : view.new_classes) out.classes.push_back(c);
    for (const auto& ext : view.extensions) {
        Class* cls = out.find_class(ext.class_name);
        cls->attributes.insert(cls->attributes.end(), ext.attributes.begin(), ext.attributes.end());
        cls->services.insert(cls->services.end(), ext.services.begin(), ext.services.end());
        cls->transactions.insert(cls->transactions.end(), ext.transactions.begin(), ext.transactions.end());
    }
    out.relationships.insert(out.relationships.end(), view.relationships.begin(), view.relationships.end());
    for (const auto& add : view.argument_additions) {
        out.find_class(add.class_name)->find_service(add.service)->arguments.push_back(add.argument);
    }
    out.trace.insert(out.trace.end(), view.trace.begin(), view.trace.end());
    result.value = std::move(out);
    return result;
}

Result<ConceptualModel> derive(const RequirementsModel& model, const std::vector<std::string>& order) {
    Result<ConceptualModel> result;
    std::vector<const CommunicativeEvent*> events;
    std::set<std::string> seen;
    ExtendedDiagram diagram;
    for (const auto& id : order) {
        const CommunicativeEvent* e = model.find_event(id);
        if (e == nullptr) {
            result.diagnostics.push_back(make_error("E-ORDER", "order names unknown event " + id));
            continue;
        }
        if (!seen.insert(naming::key(id)).second) {
            result.diagnostics.push_back(make_error("E-ORDER", "order lists event " + id + " twice"));
            continue;
        }
        events.push_back(e);
        diagram.events.push_back(EventKey{e->id, e->process});
    }
    if (!result.ok()) return result;
    std::sort(diagram.events.begin(), diagram.events.end());
    for (const auto& edge : model.precedences()) {
        if (seen.count(naming::key(edge.from)) != 0 && seen.count(naming::key(edge.to)) != 0) diagram.edges.push_back(edge);
    }
    auto poset = remove_loopbacks(diagram);
    result.diagnostics = poset.diagnostics;
    if (!result.ok()) return result;
    std::vector<std::string> ids;
    for (const auto* e : events) ids.push_back(e->id);
    if (!is_linear_extension(poset.value, ids)) {
        result.diagnostics.push_back(make_error("E-ORDER", "processing order is not compatible with the precedences"));
        return result;
    }

    ConceptualModel cm;
    cm.canonical_order = topological_order(poset.value);
    for (const auto* e : events) {
        try {
            auto merged = integrate_view(cm, derive_view(*e, model, cm));
            result.diagnostics.insert(result.diagnostics.end(), merged.diagnostics.begin(), merged.diagnostics.end());
            cm = std::move(merged.value);
        } catch (const Error& err) {
            Diagnostic d = err.diagnostic();
            if (d.message.find(e->id) == std::string::npos) d.message = e->id + ": " + d.message;
            result.diagnostics.push_back(std::move(d));
        }
    }
    result.value = revise_creation_services(std::move(cm));
    return result;
}

}  // namespace ca2oo

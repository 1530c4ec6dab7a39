#include "ca2oo/service_derivation.hpp"

#include "ca2oo/naming.hpp"

namespace ca2oo {

namespace {

Argument attribute_argument(const Attribute& a, const std::string& prefix, const std::string& event_id, int seq) {
    return Argument{prefix + a.name, to_string(a.data_type), a.size, a.nulls_allowed, false, Origin{event_id, seq}};
}

Argument object_argument(const std::string& prefix, const std::string& cls, bool nulls, const std::string& event_id,
                         int seq) {
    return Argument{prefix + cls, cls, std::nullopt, nulls, true, Origin{event_id, seq}};
}

std::string event_service_name(const CommunicativeEvent& e) {
    return naming::event_prefix(e.id) + "_" + naming::snake_words(e.reaction.name);
}

std::string call(const TransactionStep& step) {
    std::string out = step.service + "(";
    for (std::size_t i = 0; i < step.arguments.size(); ++i) out += (i == 0 ? "" : ", ") + step.arguments[i];
    out += ")";
    if (step.guard) out = "if " + *step.guard + " then " + out;
    return out;
}

std::string formula(const std::vector<TransactionStep>& steps) {
    std::string out;
    for (const auto& s : steps) {
        if (!out.empty()) out += "; ";
        out += call(s);
    }
    return out;
}

Service setter(const std::string& name, const Class& cls, const CommunicativeEvent& event,
               const std::vector<Attribute>& attrs) {
    Service s;
    s.name = name;
    s.kind = ServiceKind::setter;
    s.origin = Origin{event.id, 0};
    s.arguments.push_back(object_argument("p_this", cls.name, false, event.id, 0));
    for (const auto& a : attrs) {
        s.arguments.push_back(attribute_argument(a, "pt_", event.id, static_cast<int>(s.arguments.size())));
        s.valuations.push_back(Valuation{a.name, "pt_" + a.name});
    }
    return s;
}

}  // namespace

Service derive_creation_service(const Class& cls, const CommunicativeEvent& event, bool multi_class) {
    Service s;
    s.name = multi_class ? "new_" + naming::service_noun(cls.name) : event_service_name(event);
    s.kind = ServiceKind::creation;
    s.origin = Origin{event.id, 0};
    for (const auto& a : cls.attributes) {
        if (!a.requested) continue;
        s.arguments.push_back(attribute_argument(a, "p_atr", event.id, static_cast<int>(s.arguments.size())));
    }
    return s;
}

Argument creation_link_argument(const StructuralRelationship& rel, const std::string& event_id, int seq) {
    return object_argument("p_agr", rel.one.class_name, rel.one.min == 0, event_id, seq);
}

std::optional<Service> derive_end_of_editing(const Class& root, const CommunicativeEvent& event, bool multi_class) {
    if (!multi_class || !event.reaction.wants_end_of_editing()) return std::nullopt;
    Service s;
    s.name = event_service_name(event);
    s.kind = ServiceKind::end_of_editing;
    s.origin = Origin{event.id, 0};
    s.arguments.push_back(object_argument("p_this", root.name, false, event.id, 0));
    return s;
}

std::pair<Service, Service> derive_shared_services(const StructuralRelationship& rel, const std::string& event_id,
                                                   int seq) {
    Service ins;
    ins.kind = ServiceKind::shared_insert;
    ins.name = "ins_" + naming::snake_case(rel.one.class_name);
    ins.relationship = rel.name;
    ins.origin = Origin{event_id, seq};
    ins.arguments.push_back(object_argument("p_this", rel.many.class_name, false, event_id, 0));
    ins.arguments.push_back(object_argument("p_agr", rel.one.class_name, false, event_id, 1));
    Service del = ins;
    del.kind = ServiceKind::shared_delete;
    del.name = "del_" + naming::snake_case(rel.one.class_name);
    return {ins, del};
}

ExtensionServices derive_extension_services(const Class& cls, const CommunicativeEvent& event,
                                            const std::vector<Attribute>& new_attrs,
                                            const std::vector<StructuralRelationship>& new_rels, bool loopback_target) {
    ExtensionServices out;
    if (new_rels.empty()) {
        out.services.push_back(setter(event_service_name(event), cls, event, new_attrs));
        out.reaction = out.services.back().name;
        return out;
    }

    const std::string self = "p_this" + cls.name;
    Transaction txn;
    txn.name = naming::upper(event.id) + "_" + naming::upper(naming::snake_words(event.reaction.name));
    txn.origin = Origin{event.id, 0};
    txn.arguments.push_back(object_argument("p_this", cls.name, false, event.id, 0));

    std::vector<TransactionStep> removals;
    std::vector<TransactionStep> inserts;
    std::optional<TransactionStep> set_step;

    if (!new_attrs.empty()) {
        const std::string name = new_attrs.size() == 1 ? "set_" + new_attrs.front().name
                                                       : "set_" + naming::snake_words(event.reaction.name);
        Service s = setter(name, cls, event, new_attrs);
        s.internal = true;
        TransactionStep step{s.name, {self}, std::nullopt};
        for (const auto& a : new_attrs) {
            txn.arguments.push_back(attribute_argument(a, "pt_", event.id, static_cast<int>(txn.arguments.size())));
            step.arguments.push_back("pt_" + a.name);
        }
        set_step = step;
        out.services.push_back(std::move(s));
    }

    for (const auto& rel : new_rels) {
        auto [ins, del] = derive_shared_services(rel, event.id, 0);
        out.referenced_services.push_back(ins);
        out.referenced_classes.push_back(rel.one.class_name);
        out.referenced_services.push_back(del);
        out.referenced_classes.push_back(rel.one.class_name);

        txn.arguments.push_back(object_argument("p_agr", rel.one.class_name, false, event.id,
                                                static_cast<int>(txn.arguments.size())));
        const std::string current = self + "." + rel.one.role;
        if (loopback_target) removals.push_back(TransactionStep{del.name, {self, current}, current + " <> null"});
        inserts.push_back(TransactionStep{ins.name, {self, "p_agr" + rel.one.class_name}, std::nullopt});

        ins.internal = true;
        del.internal = loopback_target;
        out.services.push_back(std::move(ins));
        out.services.push_back(std::move(del));
    }

    txn.steps = removals;
    if (set_step) txn.steps.push_back(*set_step);
    txn.steps.insert(txn.steps.end(), inserts.begin(), inserts.end());
    txn.formula_note = formula(txn.steps);
    out.reaction = txn.name;
    out.transaction = std::move(txn);
    return out;
}

Service derive_carrier_setter(const Class& cls, const CommunicativeEvent& event, const std::vector<Attribute>& attrs,
                              bool event_named) {
    std::string name;
    if (event_named) {
        name = event_service_name(event);
    } else if (attrs.size() == 1) {
        name = "set_" + attrs.front().name;
    } else {
        name = "set_" + naming::snake_words(event.reaction.name);
    }
    return setter(name, cls, event, attrs);
}

ConceptualModel revise_creation_services(ConceptualModel model) {
    for (auto& cls : model.classes) {
        int added = 0;
        std::vector<Transaction> created;
        for (auto& svc : cls.services) {
            if (svc.kind != ServiceKind::creation) continue;
            std::vector<std::string> later;
            TransactionStep step{svc.name, {}, std::nullopt};
            Transaction txn;
            for (const auto& arg : svc.arguments) {
                if (arg.object_valued && arg.origin.event_id != svc.origin.event_id) {
                    later.push_back(arg.name + " (" + arg.origin.event_id + ")");
                    step.arguments.push_back("null");
                } else {
                    step.arguments.push_back(arg.name);
                    Argument copy = arg;
                    copy.origin = Origin{svc.origin.event_id, static_cast<int>(txn.arguments.size())};
                    txn.arguments.push_back(copy);
                }
            }
            if (later.empty()) continue;
            svc.internal = true;
            txn.name = "CREATE_" + naming::upper(naming::service_noun(cls.name));
            txn.steps.push_back(step);
            txn.formula_note = formula(txn.steps);
            txn.origin = Origin{svc.origin.event_id, 1000 + added++};

            std::string listing;
            for (const auto& l : later) listing += (listing.empty() ? "" : ", ") + l;
            model.trace.push_back(TraceRecord{"R-REVISE", svc.origin.event_id, svc.origin.event_id + "/reaction",
                                              "service", cls.name + "." + svc.name,
                                              "marked internal; object arguments from later events: " + listing});
            model.trace.push_back(TraceRecord{"R-REVISE", svc.origin.event_id, svc.origin.event_id + "/reaction",
                                              "transaction", cls.name + "." + txn.name,
                                              "creation transaction passing null for " +
                                                  std::to_string(later.size()) + " object argument(s)"});
            created.push_back(std::move(txn));
        }
        for (auto& t : created) cls.transactions.push_back(std::move(t));
    }
    return model;
}

}  // namespace ca2oo

#include "ca2oo/conceptual_model.hpp"

namespace ca2oo {

const Attribute* Class::find_attribute(std::string_view n) const {
    for (const auto& a : attributes) {
        if (a.name == n) return &a;
    }
    return nullptr;
}

const Service* Class::find_service(std::string_view n) const {
    for (const auto& s : services) {
        if (s.name == n) return &s;
    }
    return nullptr;
}

Service* Class::find_service(std::string_view n) {
    for (auto& s : services) {
        if (s.name == n) return &s;
    }
    return nullptr;
}

const Transaction* Class::find_transaction(std::string_view n) const {
    for (const auto& t : transactions) {
        if (t.name == n) return &t;
    }
    return nullptr;
}

bool Class::has_member(std::string_view n) const { return find_service(n) != nullptr || find_transaction(n) != nullptr; }

bool StructuralRelationship::involves(std::string_view class_name) const {
    return one.class_name == class_name || many.class_name == class_name;
}

const Class* ConceptualModel::find_class(std::string_view name) const {
    for (const auto& c : classes) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

Class* ConceptualModel::find_class(std::string_view name) {
    for (auto& c : classes) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

const StructuralRelationship* ConceptualModel::find_relationship(std::string_view name) const {
    for (const auto& r : relationships) {
        if (r.name == name) return &r;
    }
    return nullptr;
}

std::string to_string(ServiceKind kind) {
    switch (kind) {
        case ServiceKind::creation: return "creation";
        case ServiceKind::end_of_editing: return "end_of_editing";
        case ServiceKind::setter: return "setter";
        case ServiceKind::shared_insert: return "shared_insert";
        case ServiceKind::shared_delete: return "shared_delete";
    }
    return "setter";
}

}  // namespace ca2oo

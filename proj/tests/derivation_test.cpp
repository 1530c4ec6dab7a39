#include <gtest/gtest.h>

#include <algorithm>

#include "ca2oo/derivation.hpp"
#include "ca2oo/error.hpp"
#include "fixtures.hpp"

using namespace ca2oo;

namespace {

const RequirementsModel& corpus() { return testsupport::corpus_result().requirements; }
const ConceptualModel& derived() { return testsupport::corpus_result().model; }

const std::vector<std::string> kPublishedOrder = {"SUPP2", "PROD2", "CLIE1",  "SALE1", "SALE2", "SALE3",
                                              "LOGI10", "SALE4", "RISK4", "SALE5", "SALE6"};

// The model derived from the events listed before `event` in the published order.
ConceptualModel model_before(const std::string& event) {
    const auto end = std::find(kPublishedOrder.begin(), kPublishedOrder.end(), event);
    const auto r = derive(corpus(), std::vector<std::string>(kPublishedOrder.begin(), end));
    EXPECT_TRUE(r.ok());
    return r.value;
}

struct AttrRow {
    std::string name;
    bool id;
    AttributeKind kind;
    DataType type;
    std::optional<int> size;
    bool requested;
    bool nulls;
};

void expect_rows(const Class& cls, const std::vector<AttrRow>& rows) {
    ASSERT_GE(cls.attributes.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& a = cls.attributes[i];
        const auto& w = rows[i];
        EXPECT_EQ(a.name, w.name);
        EXPECT_EQ(a.is_id, w.id) << w.name;
        EXPECT_EQ(a.kind, w.kind) << w.name;
        EXPECT_EQ(a.data_type, w.type) << w.name;
        EXPECT_EQ(a.size, w.size) << w.name;
        EXPECT_EQ(a.requested, w.requested) << w.name;
        EXPECT_EQ(a.nulls_allowed, w.nulls) << w.name;
    }
}

constexpr auto C = AttributeKind::constant;
constexpr auto V = AttributeKind::variable;

const StructuralRelationship& rel(const std::string& name) {
    const auto* r = derived().find_relationship(name);
    EXPECT_NE(r, nullptr) << name;
    static const StructuralRelationship none;
    return r != nullptr ? *r : none;
}

}  // namespace

TEST(Derivation, CorpusHasTheNineClasses) {
    std::vector<std::string> names;
    for (const auto& c : derived().classes) names.push_back(c.name);
    std::sort(names.begin(), names.end());
    EXPECT_EQ(names, (std::vector<std::string>{"Client", "ClientAddress", "ClientOrder", "Destination", "InsurancePolicy",
                                               "Line", "Product", "Supplier", "TruckDriver"}));
}

TEST(Derivation, EmptyModel) {
    const auto r = derive(RequirementsModel{}, {});
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(r.value.classes.empty());
    EXPECT_TRUE(r.value.relationships.empty());
    EXPECT_TRUE(r.value.trace.empty());
}

TEST(Derivation, SupplierAttributes) {
    const Class* s = derived().find_class("Supplier");
    ASSERT_NE(s, nullptr);
    ASSERT_EQ(s->attributes.size(), 8U);
    expect_rows(*s, {
                        {"supplier_code", true, C, DataType::autonumeric, {}, true, false},
                        {"supplier_name", false, V, DataType::string, 120, true, false},
                        {"VAT_number", false, V, DataType::nat, {}, true, false},
                        {"telephone", false, V, DataType::string, 12, true, true},
                        {"address", false, V, DataType::string, 300, true, true},
                        {"post_code", false, V, DataType::string, 12, true, true},
                        {"city", false, V, DataType::string, 100, true, true},
                        {"registration_date", false, V, DataType::date, {}, true, true},
                    });
}

TEST(Derivation, ClientOrderCreationAttributes) {
    const Class* c = derived().find_class("ClientOrder");
    ASSERT_NE(c, nullptr);
    expect_rows(*c, {
                        {"order_number", true, C, DataType::autonumeric, {}, true, false},
                        {"request_date", false, C, DataType::date, {}, true, false},
                        {"payment_type", false, V, DataType::string, 30, true, true},
                    });
    EXPECT_EQ(c->attributes[1].default_value, std::optional<std::string>("systemDate()"));
}

TEST(Derivation, SingleFieldIdentifiedClass) {
    const auto r = parse_requirements(
        "process P \"p\"\nevent P1 \"x\" in P {\n  message T = < Code [i text (3)] >\n  registers Thing = T\n"
        "  identified-by Thing (Code)\n  reaction creation name \"make\"\n}\n");
    const auto& e = r.value.events.at(0);
    const Class cls = derive_class_from_aggregation(e.message.root, e, "Thing");
    ASSERT_EQ(cls.attributes.size(), 1U);
    EXPECT_TRUE(cls.attributes[0].is_id);
    EXPECT_EQ(cls.attributes[0].kind, AttributeKind::constant);
}

TEST(Derivation, SurrogateIdentifierWhenNoneDeclared) {
    const Class* d = derived().find_class("Destination");
    ASSERT_NE(d, nullptr);
    EXPECT_EQ(d->attributes[0].name, "destination_id");
    EXPECT_TRUE(d->attributes[0].is_id);
    EXPECT_EQ(d->attributes[0].data_type, DataType::autonumeric);
    EXPECT_TRUE(std::any_of(derived().trace.begin(), derived().trace.end(), [](const TraceRecord& t) {
        return t.rule_id == "R-DEFAULT" && t.element_path == "Destination.destination_id" &&
               t.note.find("D3") != std::string::npos;
    }));
}

TEST(Derivation, DomainMapping) {
    Domain number{Domain::Kind::number, {}, {}};
    EXPECT_EQ(map_domain(number, OpCode::generated), DataType::autonumeric);
    EXPECT_EQ(map_domain(number, OpCode::indicated), DataType::real);
    EXPECT_EQ(map_domain(Domain{Domain::Kind::money, {}, {}}, OpCode::indicated), DataType::real);
    EXPECT_EQ(map_domain(Domain{Domain::Kind::text, {}, {}}, OpCode::indicated), DataType::string);
    EXPECT_EQ(map_domain(Domain{Domain::Kind::date, {}, {}}, OpCode::indicated), DataType::date);
    EXPECT_EQ(map_domain(Domain{Domain::Kind::datetime, {}, {}}, OpCode::indicated), DataType::datetime);
    EXPECT_EQ(map_domain(Domain{Domain::Kind::enumeration, {"a", "b"}, {}}, OpCode::indicated), DataType::string);
    EXPECT_THROW(map_domain(Domain{Domain::Kind::text, {}, {}}, OpCode::generated), Error);
    EXPECT_THROW(map_domain(Domain{Domain::Kind::reference, {}, "X"}, OpCode::indicated), Error);
}

TEST(Derivation, EnumAttributeSizedByLongestLiteral) {
    const Attribute* d = derived().find_class("ClientOrder")->find_attribute("decision");
    ASSERT_NE(d, nullptr);
    EXPECT_EQ(d->data_type, DataType::string);
    EXPECT_EQ(d->size, 8);  // "rejected"
    EXPECT_EQ(d->enum_literals, (std::vector<std::string>{"accepted", "rejected"}));
}

TEST(Derivation, DefaultStringSizeIsTraced) {
    const Attribute* code = derived().find_class("Product")->find_attribute("product_code");
    EXPECT_EQ(code->size, 100);
    EXPECT_TRUE(std::any_of(derived().trace.begin(), derived().trace.end(), [](const TraceRecord& t) {
        return t.rule_id == "R-DEFAULT" && t.element_path == "Product.product_code" &&
               t.note.find("D14") != std::string::npos;
    }));
}

TEST(Derivation, IterationRelationships) {
    const auto& cca = rel("client_client_address");
    EXPECT_EQ(cca.one.class_name, "Client");
    EXPECT_EQ(cca.one.min, 1);
    EXPECT_EQ(cca.one.max, 1);
    EXPECT_EQ(cca.many.class_name, "ClientAddress");
    EXPECT_EQ(cca.many.min, 0);
    EXPECT_FALSE(cca.many.max.has_value());
    EXPECT_FALSE(cca.dynamic);
    EXPECT_EQ(cca.source, RelationshipSource::iteration);
    EXPECT_FALSE(rel("client_order_destination").many.max.has_value());
    EXPECT_EQ(rel("client_order_destination").many.class_name, "Destination");
    EXPECT_FALSE(rel("destination_line").many.max.has_value());
}

TEST(Derivation, UnannotatedIterationUsesDefaults) {
    const auto r = parse_requirements(
        "process P \"p\"\nevent P1 \"x\" in P {\n  message T = < Code [i text (3)] + KIDS = { KID = < N [i text (2)] > } >\n"
        "  registers Thing = T\n  registers Kid = T.KIDS.KID\n  reaction creation name \"make\"\n}\n");
    ASSERT_TRUE(r.ok());
    const auto m = derive(r.value, {"P1"});
    ASSERT_TRUE(m.ok());
    ASSERT_EQ(m.value.relationships.size(), 1U);
    const auto& x = m.value.relationships[0];
    EXPECT_EQ(x.one.min, 1);
    EXPECT_EQ(x.one.max, 1);
    EXPECT_EQ(x.many.min, 0);
    EXPECT_FALSE(x.many.max.has_value());
    EXPECT_FALSE(x.annotated);
    EXPECT_TRUE(std::any_of(m.value.trace.begin(), m.value.trace.end(), [](const TraceRecord& t) {
        return t.rule_id == "R-DEFAULT" && t.element_kind == "relationship" && t.note.find("D11") != std::string::npos;
    }));
}

TEST(Derivation, ReferenceRelationships) {
    const auto& sup = rel("supplier_client_order");
    EXPECT_EQ(sup.one.class_name, "Supplier");
    EXPECT_EQ(sup.one.min, 0);
    EXPECT_EQ(sup.one.max, 1);
    EXPECT_EQ(sup.many.class_name, "ClientOrder");
    EXPECT_FALSE(sup.many.max.has_value());
    EXPECT_TRUE(sup.dynamic);
    const auto& ins = rel("insurance_policy_client_order");
    EXPECT_EQ(ins.one.min, 0);
    EXPECT_EQ(ins.one.max, 1);
    EXPECT_EQ(ins.many.min, 0);
    const auto& client = rel("client_client_order");
    EXPECT_FALSE(client.dynamic);
    EXPECT_EQ(client.one.class_name, "Client");
    EXPECT_EQ(client.one.max, 1);
}

TEST(Derivation, RelationshipAndRoleNames) {
    const auto& r = rel("client_address_destination");
    EXPECT_EQ(r.one.class_name, "ClientAddress");
    EXPECT_EQ(r.one.role, "address");
    EXPECT_EQ(r.many.role, "destinations");
    EXPECT_EQ(rel("supplier_client_order").one.role, "supplier");
    EXPECT_EQ(rel("supplier_client_order").many.role, "clientorders");
    EXPECT_EQ(rel("client_order_destination").one.role, "clientorder");  // no field name applies

    StructuralRelationship single;
    single.one = {"Parent", "", 1, 1};
    single.many = {"Child", "", 0, 1};
    name_relationship_and_roles(single);
    EXPECT_EQ(single.name, "parent_child");
    EXPECT_EQ(single.many.role, "child");
}

TEST(Derivation, TotalRelationshipCount) { EXPECT_EQ(derived().relationships.size(), 9U); }

TEST(Derivation, SupplierViewFromEmptyModel) {
    const auto view = derive_view(*corpus().find_event("SUPP2"), corpus(), ConceptualModel{});
    ASSERT_EQ(view.new_classes.size(), 1U);
    EXPECT_EQ(view.new_classes[0].attributes.size(), 8U);
    ASSERT_EQ(view.new_classes[0].services.size(), 1U);
    EXPECT_EQ(view.new_classes[0].services[0].kind, ServiceKind::creation);
    EXPECT_TRUE(view.extensions.empty());
    const auto integrated = integrate_view(ConceptualModel{}, view);
    ASSERT_TRUE(integrated.ok());
    EXPECT_EQ(integrated.value.classes.size(), 1U);
}

TEST(Derivation, SaleTwoView) {
    const auto before = model_before("SALE2");
    const auto view = derive_view(*corpus().find_event("SALE2"), corpus(), before);
    EXPECT_TRUE(view.new_classes.empty());
    const auto order = std::find_if(view.extensions.begin(), view.extensions.end(),
                                    [](const ClassExtension& x) { return x.class_name == "ClientOrder"; });
    ASSERT_NE(order, view.extensions.end());
    EXPECT_EQ(order->attributes.size(), 1U);
    EXPECT_EQ(order->services.size(), 3U);
    EXPECT_EQ(order->transactions.size(), 1U);
    EXPECT_EQ(view.relationships.size(), 1U);

    const auto after = integrate_view(before, view);
    ASSERT_TRUE(after.ok());
    EXPECT_EQ(after.value.find_class("ClientOrder")->attributes.size(),
              before.find_class("ClientOrder")->attributes.size() + 1);
    EXPECT_EQ(after.value.relationships.size(), before.relationships.size() + 1);

    const auto again = integrate_view(after.value, view);
    EXPECT_FALSE(again.ok());
    EXPECT_EQ(again.value.classes, after.value.classes);
    EXPECT_EQ(again.value.relationships, after.value.relationships);
}

TEST(Derivation, ExtensionAttributes) {
    const Class* c = derived().find_class("ClientOrder");
    for (const char* n : {"decision", "planned_delivery_date", "response_date"}) {
        const Attribute* a = c->find_attribute(n);
        ASSERT_NE(a, nullptr) << n;
        EXPECT_EQ(a->origin.event_id, "SALE3");
        EXPECT_FALSE(a->is_id);
        EXPECT_EQ(a->kind, V);
        EXPECT_FALSE(a->requested);
        EXPECT_TRUE(a->nulls_allowed);
    }
    const Attribute* ts = c->find_attribute("shipping_timestamp");
    ASSERT_NE(ts, nullptr);
    EXPECT_EQ(ts->data_type, DataType::datetime);
    const Attribute* stop = derived().find_class("Destination")->find_attribute("stop_order");
    ASSERT_NE(stop, nullptr);
    EXPECT_EQ(stop->origin.event_id, "SALE4");
    EXPECT_EQ(stop->data_type, DataType::nat);
}

TEST(Derivation, AnnotationsOnCreationAttributes) {
    const Class* line = derived().find_class("Line");
    const Attribute* price = line->find_attribute("price");
    EXPECT_EQ(price->kind, V);  // init alone would make it constant
    EXPECT_FALSE(price->nulls_allowed);
    EXPECT_EQ(price->default_value, std::optional<std::string>("Product.Price"));
    EXPECT_EQ(line->find_attribute("quantity")->data_type, DataType::nat);
    EXPECT_EQ(derived().find_class("InsurancePolicy")->find_attribute("clauses")->data_type, DataType::text);
}

TEST(Derivation, OrderErrors) {
    EXPECT_FALSE(derive(corpus(), {"NOPE"}).ok());
    EXPECT_FALSE(derive(corpus(), {"SUPP2", "SUPP2"}).ok());
    EXPECT_FALSE(derive(corpus(), {"SALE1", "CLIE1", "PROD2"}).ok());
    const auto r = derive(corpus(), {"SALE2", "SALE1"});
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.diagnostics[0].code, "E-ORDER");
}

TEST(Derivation, MissingPrecedentSurfacesAsADiagnostic) {
    // SALE1 refers to classes that no earlier event created
    const auto r = derive(corpus(), {"SALE1"});
    EXPECT_FALSE(r.ok());
}

TEST(Derivation, CanonicalOrderIsRecorded) {
    EXPECT_EQ(derived().canonical_order.size(), 11U);
    EXPECT_EQ(derived().canonical_order.front(), "CLIE1");
}

TEST(Derivation, EveryEventHasOneReaction) {
    for (const auto& e : corpus().events) {
        const auto n = std::count_if(derived().trace.begin(), derived().trace.end(), [&](const TraceRecord& t) {
            return t.event_id == e.id && t.note == kReactionNote;
        });
        EXPECT_EQ(n, 1) << e.id;
    }
}

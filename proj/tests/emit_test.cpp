#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <regex>
#include <sstream>

#include "ca2oo/emit.hpp"
#include "ca2oo/error.hpp"
#include "ca2oo/pipeline.hpp"
#include "fixtures.hpp"

using namespace ca2oo;

namespace {

std::size_t count_matches(const std::string& text, const std::regex& re) {
    return static_cast<std::size_t>(
        std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

const StateTransitionDiagram& corpus_std(const std::string& cls) {
    const auto& all = testsupport::corpus_result().stds;
    return *std::find_if(all.begin(), all.end(), [&](const auto& d) { return d.class_name == cls; });
}

const std::regex kDotNode(R"(^  "[^"]+" \[label=)", std::regex::multiline);
const std::regex kDotEdge(R"(^  "[^"]+" -> "[^"]+")", std::regex::multiline);

}  // namespace

TEST(Emit, CanonicalJsonIsDeterministic) {
    const auto& m = testsupport::corpus_result().model;
    EXPECT_EQ(emit_canonical(m), emit_canonical(m));
    EXPECT_EQ(emit_canonical(m), emit_canonical(canonicalized(m)));
}

TEST(Emit, CanonicalJsonShape) {
    const auto j = nlohmann::json::parse(emit_canonical(testsupport::corpus_result().model));
    EXPECT_EQ(j.at("schema"), kSchemaName);
    EXPECT_EQ(j.at("version"), kSchemaVersion);
    ASSERT_EQ(j.at("classes").size(), 9U);
    EXPECT_EQ(j.at("relationships").size(), 9U);
    EXPECT_FALSE(j.contains("trace"));
    std::vector<std::string> names;
    for (const auto& c : j.at("classes")) names.push_back(c.at("name"));
    EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
    const auto& first = j.at("classes").at(0).at("attributes").at(0);
    for (const char* key : {"id", "kind", "name", "nulls", "origin", "requested", "size", "type"})
        EXPECT_TRUE(first.contains(key)) << key;
}

TEST(Emit, CanonicalJsonKeysAreSorted) {
    const auto text = emit_canonical(testsupport::corpus_result().model);
    // nlohmann's default object is a sorted map, so a reparse and dump must reproduce the text.
    EXPECT_EQ(nlohmann::json::parse(text).dump(2) + "\n", text);
}

TEST(Emit, EmptyModel) {
    const ConceptualModel empty;
    const auto j = nlohmann::json::parse(emit_canonical(empty));
    EXPECT_TRUE(j.at("classes").empty());
    EXPECT_TRUE(j.at("relationships").empty());
    const auto dot = emit_class_diagram(empty, Dialect::dot);
    EXPECT_EQ(count_matches(dot, kDotNode), 0U);
    EXPECT_EQ(count_matches(dot, kDotEdge), 0U);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    const auto puml = emit_class_diagram(empty, Dialect::plantuml);
    EXPECT_EQ(puml.rfind("@startuml", 0), 0U);
    EXPECT_NE(puml.find("@enduml"), std::string::npos);
}

TEST(Emit, ClassDiagramDot) {
    const auto dot = emit_class_diagram(testsupport::corpus_result().model, Dialect::dot);
    EXPECT_EQ(count_matches(dot, kDotNode), 9U);
    EXPECT_EQ(count_matches(dot, kDotEdge), 9U);
    EXPECT_NE(dot.find("\"Supplier\" -> \"ClientOrder\" [label=\"supplier_client_order\\n0:1 — 0:M (dynamic)\""),
              std::string::npos);
    EXPECT_NE(dot.find("#order_number : Autonumeric"), std::string::npos);
    EXPECT_NE(dot.find("CREATE_ORDER [transaction]"), std::string::npos);
    EXPECT_EQ(dot.find("\\\\n"), std::string::npos);
}

TEST(Emit, ClassDiagramPlantUml) {
    const auto puml = emit_class_diagram(testsupport::corpus_result().model, Dialect::plantuml);
    EXPECT_EQ(count_matches(puml, std::regex(R"(^class \w+)", std::regex::multiline)), 9U);
    EXPECT_NE(puml.find("Supplier"), std::string::npos);
    EXPECT_NE(puml.find("0:1"), std::string::npos);
    EXPECT_NE(puml.find("@enduml"), std::string::npos);
}

TEST(Emit, BasicStdDot) {
    const auto dot = emit_std_diagram(corpus_std("Supplier"), Dialect::dot);
    EXPECT_EQ(count_matches(dot, std::regex(R"(^  "[^"]+"( \[|;))", std::regex::multiline)), 3U);
    EXPECT_NE(dot.find("\"PRECREATION\" -> \"ALIVE\" [label=\"Supp2_new_supplier\"]"), std::string::npos);
}

TEST(Emit, LoopbackEdgeInStd) {
    const auto dot = emit_std_diagram(corpus_std("ClientOrder"), Dialect::dot);
    EXPECT_NE(dot.find("\"Sale3ed\" -> \"Sale2ed\" [label=\"SALE2_ASSIGN_SUPPLIER\""), std::string::npos);
    const auto puml = emit_std_diagram(corpus_std("ClientOrder"), Dialect::plantuml);
    EXPECT_NE(puml.find("Sale3ed"), std::string::npos);
    EXPECT_NE(puml.find("SALE2_ASSIGN_SUPPLIER"), std::string::npos);
}

TEST(Emit, Trace) {
    const auto& m = testsupport::corpus_result().model;
    const auto text = emit_trace(m.trace);
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.rfind("RULE", 0), 0U);
    std::size_t rows = 0;
    bool revise = false;
    for (std::string line; std::getline(in, line);) {
        ++rows;
        if (line.rfind("R-REVISE", 0) == 0 && line.find("CREATE_ORDER") != std::string::npos) revise = true;
    }
    EXPECT_EQ(rows, m.trace.size());
    EXPECT_TRUE(revise);

    const auto empty = emit_trace({});
    EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n'), 1);
    EXPECT_EQ(empty.rfind("RULE", 0), 0U);
}

TEST(Emit, Dialects) {
    EXPECT_EQ(parse_dialect("dot"), Dialect::dot);
    EXPECT_EQ(parse_dialect("plantuml"), Dialect::plantuml);
    EXPECT_EQ(parse_dialect("puml"), Dialect::plantuml);
    EXPECT_THROW(parse_dialect("svg"), Error);
    EXPECT_EQ(dialect_for_path("out/c.dot"), Dialect::dot);
    EXPECT_EQ(dialect_for_path("c.gv"), Dialect::dot);
    EXPECT_EQ(dialect_for_path("c.puml"), Dialect::plantuml);
    EXPECT_EQ(dialect_for_path("c.plantuml"), Dialect::plantuml);
    EXPECT_EQ(dialect_for_path("c.txt"), std::nullopt);
}

TEST(Emit, EscapesAwkwardNames) {
    const auto r = run_pipeline(
        "process P \"p\"\n"
        "event P1 \"say \\\"hi\\\"\" in P {\n  message T = < Code [i text (3)] >\n  registers Thing = T\n"
        "  identified-by Thing (Code)\n  reaction creation name \"make\"\n}\n");
    ASSERT_TRUE(r.ok());
    const auto dot = emit_class_diagram(r.model, Dialect::dot);
    EXPECT_EQ(count_matches(dot, kDotNode), 1U);
    EXPECT_TRUE(nlohmann::json::accept(emit_canonical(r.model)));
}

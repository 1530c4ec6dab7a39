#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ca2oo/event_ordering.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace ca2oo;

namespace {

const RequirementsModel& corpus() { return testsupport::corpus_result().requirements; }

std::vector<std::string> ids(const std::vector<EventKey>& keys) {
    std::vector<std::string> out;
    for (const auto& k : keys) out.push_back(k.id);
    return out;
}

RequirementsModel chain_model(const std::string& extra_edges = "") {
    const std::string text =
        "process A \"a\"\nprocess B \"b\"\nprocess C \"c\"\n"
        "event A1 \"a\" in A {\n  message MA = < X [i text (2)] >\n  registers MA = MA\n  reaction creation name "
        "\"a\"\n  precedes B1\n}\n"
        "event B1 \"b\" in B {\n  message MB = < X [i text (2)] >\n  registers MB = MB\n  reaction creation name "
        "\"b\"\n  precedes C1\n" +
        extra_edges +
        "}\n"
        "event C1 \"c\" in C {\n  message MC = < X [i text (2)] >\n  registers MC = MC\n  reaction creation name "
        "\"c\"\n}\n";
    const auto r = parse_requirements(text);
    EXPECT_TRUE(r.ok());
    return r.value;
}

const std::vector<std::string> kPublishedOrder = {"SUPP2", "PROD2", "CLIE1",  "SALE1", "SALE2", "SALE3",
                                              "LOGI10", "SALE4", "RISK4", "SALE5", "SALE6"};

}  // namespace

TEST(EventOrdering, SaleExtensionHasElevenEvents) {
    const auto d = extend_diagram(corpus(), "SALE");
    ASSERT_TRUE(d.ok());
    auto got = ids(d.value.events);
    std::sort(got.begin(), got.end());
    std::vector<std::string> want = {"CLIE1", "LOGI10", "PROD2", "RISK4", "SALE1", "SALE2",
                                     "SALE3", "SALE4",  "SALE5", "SALE6", "SUPP2"};
    EXPECT_EQ(got, want);
    EXPECT_EQ(d.value.root_process, "SALE");
}

TEST(EventOrdering, ExtensionFollowsPrecedentsTransitively) {
    const auto m = chain_model();
    const auto c = extend_diagram(m, "C");
    ASSERT_TRUE(c.ok());
    EXPECT_EQ(c.value.events.size(), 3U);
    EXPECT_EQ(c.value.edges.size(), 2U);
    const auto a = extend_diagram(m, "A");
    EXPECT_EQ(a.value.events.size(), 1U);
    EXPECT_TRUE(a.value.edges.empty());
    EXPECT_FALSE(extend_diagram(m, "ZZZ").ok());
}

TEST(EventOrdering, CorpusLoopbackRemoval) {
    const auto d = extend_diagram(corpus(), "SALE");
    const auto p = remove_loopbacks(d.value);
    ASSERT_TRUE(p.ok());
    ASSERT_EQ(p.value.removed.size(), 1U);
    EXPECT_EQ(p.value.removed[0].from, "SALE3");
    EXPECT_EQ(p.value.removed[0].to, "SALE2");
    EXPECT_EQ(p.value.order_edges.size(), d.value.edges.size() - 1);
}

TEST(EventOrdering, AcyclicDiagramIsUntouched) {
    const auto d = full_diagram(chain_model());
    const auto p = remove_loopbacks(d);
    ASSERT_TRUE(p.ok());
    EXPECT_TRUE(p.value.removed.empty());
    EXPECT_EQ(p.value.order_edges.size(), d.edges.size());
}

TEST(EventOrdering, UnmarkedCycleIsAnError) {
    const auto p = remove_loopbacks(full_diagram(chain_model("  precedes A1\n")));
    ASSERT_FALSE(p.ok());
    EXPECT_EQ(p.diagnostics[0].code, "E-CYCLE");
    for (const char* id : {"A1", "B1"}) EXPECT_NE(p.diagnostics[0].message.find(id), std::string::npos);
    EXPECT_TRUE(remove_loopbacks(full_diagram(chain_model("  precedes A1 loopback\n"))).ok());
}

TEST(EventOrdering, FindCycle) {
    const std::vector<EventKey> ev = {{"A", "P"}, {"B", "P"}, {"C", "P"}};
    EXPECT_TRUE(find_cycle(ev, {{"A", "B"}, {"B", "C"}}).empty());
    const auto cyc = find_cycle(ev, {{"A", "B"}, {"B", "C"}, {"C", "B"}});
    ASSERT_GE(cyc.size(), 3U);
    EXPECT_EQ(cyc.front(), cyc.back());
}

TEST(EventOrdering, EmptyPoset) {
    EXPECT_TRUE(topological_order(EventPoset{}).empty());
    EXPECT_TRUE(is_linear_extension(EventPoset{}, {}));
}

TEST(EventOrdering, PublishedOrderIsALinearExtension) {
    const auto p = remove_loopbacks(extend_diagram(corpus(), "SALE").value).value;
    EXPECT_TRUE(is_linear_extension(p, kPublishedOrder));
    const auto oracle = testsupport::oracle_poset(corpus(), "SALE");
    EXPECT_TRUE(testsupport::oracle_is_linear_extension(oracle, kPublishedOrder));
    auto broken = kPublishedOrder;
    std::swap(broken[3], broken[4]);  // SALE2 before SALE1
    EXPECT_FALSE(is_linear_extension(p, broken));
    EXPECT_FALSE(testsupport::oracle_is_linear_extension(oracle, broken));
}

TEST(EventOrdering, ToolOrderIsAmongAllLinearExtensions) {
    const auto p = remove_loopbacks(extend_diagram(corpus(), "SALE").value).value;
    const auto order = topological_order(p);
    const auto all = testsupport::all_linear_extensions(testsupport::oracle_poset(corpus(), "SALE"));
    ASSERT_FALSE(all.empty());
    EXPECT_NE(std::find(all.begin(), all.end(), order), all.end());
    EXPECT_NE(std::find(all.begin(), all.end(), kPublishedOrder), all.end());
    // the library check agrees with the oracle on every extension
    for (const auto& o : all) ASSERT_TRUE(is_linear_extension(p, o));
}

TEST(EventOrdering, TieBreakIsProcessThenId) {
    const auto p = remove_loopbacks(extend_diagram(corpus(), "SALE").value).value;
    EXPECT_EQ(topological_order(p), (std::vector<std::string>{"CLIE1", "LOGI10", "PROD2", "RISK4", "SALE1", "SUPP2",
                                                              "SALE2", "SALE3", "SALE4", "SALE5", "SALE6"}));
}

TEST(EventOrdering, Ancestors) {
    const auto p = remove_loopbacks(extend_diagram(corpus(), "SALE").value).value;
    auto a = ancestors(p, "SALE2");
    std::sort(a.begin(), a.end());
    EXPECT_EQ(a, (std::vector<std::string>{"CLIE1", "PROD2", "SALE1", "SUPP2"}));
    EXPECT_TRUE(ancestors(p, "SUPP2").empty());
}

TEST(EventOrdering, GeneratedPosetsAgreeWithTheOracle) {
    // random DAGs: edges only from lower to higher index
    std::mt19937 rng(7);
    for (int round = 0; round < 30; ++round) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        EventPoset p;
        testsupport::OraclePoset o;
        for (int i = 0; i < n; ++i) {
            const std::string id = "E" + std::to_string(i);
            p.events.push_back({id, "P"});
            o.events.push_back(id);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (std::bernoulli_distribution(0.3)(rng)) {
                    p.order_edges.emplace_back("E" + std::to_string(i), "E" + std::to_string(j));
                    o.edges.emplace_back("E" + std::to_string(i), "E" + std::to_string(j));
                }
            }
        }
        const auto all = testsupport::all_linear_extensions(o);
        std::set<std::vector<std::string>> oracle_set(all.begin(), all.end());
        EXPECT_TRUE(oracle_set.count(topological_order(p)));
        std::vector<std::string> perm = o.events;
        std::sort(perm.begin(), perm.end());
        do {
            EXPECT_EQ(is_linear_extension(p, perm), oracle_set.count(perm) == 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

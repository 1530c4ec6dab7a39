#include <gtest/gtest.h>

#include "ca2oo/emit.hpp"
#include "fixtures.hpp"

using namespace ca2oo;

// Regenerate with
//   ca2oo derive corpus/superstationery.carm --process SALE
//     --out tests/golden/superstationery.model.json --diagram tests/golden/superstationery.classes.dot

TEST(Golden, CorpusModelJson) {
    const auto expected = testsupport::read_text(testsupport::golden_dir() / "superstationery.model.json");
    ASSERT_FALSE(expected.empty());
    EXPECT_EQ(emit_canonical(testsupport::corpus_result().model), expected);
}

TEST(Golden, CorpusClassDiagram) {
    const auto expected = testsupport::read_text(testsupport::golden_dir() / "superstationery.classes.dot");
    ASSERT_FALSE(expected.empty());
    EXPECT_EQ(emit_class_diagram(testsupport::corpus_result().model, Dialect::dot), expected);
}

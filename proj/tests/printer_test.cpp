// Copyright 2026 The PDL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <string>

#include "pdl/parser.hpp"
#include "pdl/printer.hpp"
#include "support/doc_generator.hpp"
#include "support/fixtures.hpp"

namespace pdl {
namespace {

TEST(PrinterTest, EmptyDocumentPrintsNothing) {
  EXPECT_EQ(print_canonical(PipelineDocument{}), "");
  EXPECT_EQ(print_canonical(parse("# only a comment\n", "t")), "");
}

TEST(PrinterTest, CanonicalLayout) {
  const auto doc = parse(
      R"(map m { start: "a"; section { from: "a"; to: "b"; via: c; why_strategy: ?; } }
         chunk c @task { intention: "b"; inputs: []; outputs: ?; strategy: text "go";
           hyperparameters { } keywords: []; }
         product p { kind: labels; n = 1; })",
      "t");
  const std::string want =
      "product p {\n"
      "  kind: labels;\n"
      "  n = 1;\n"
      "}\n"
      "\n"
      "chunk c @task {\n"
      "  intention: \"b\";\n"
      "  inputs: [];\n"
      "  outputs: ?;\n"
      "  strategy: text \"go\";\n"
      "}\n"
      "\n"
      "map m {\n"
      "  start: \"a\";\n"
      "  section {\n"
      "    from: \"a\";\n"
      "    to: \"b\";\n"
      "    via: c;\n"
      "  }\n"
      "}\n";
  EXPECT_EQ(print_canonical(doc), want);
}

TEST(PrinterTest, QuotingEscapesOnlyQuoteAndBackslash) {
  EXPECT_EQ(quote_string(R"(a"b\c)"), R"("a\"b\\c")");
  EXPECT_EQ(quote_string("é\t"), "\"é\t\"");
}

TEST(PrinterTest, Values) {
  EXPECT_EQ(print_value(Value::unreported()), "?");
  EXPECT_EQ(print_value(Value::number("-0.50")), "-0.50");
  EXPECT_EQ(print_value(Value::list({Value::ident("a"), Value::string("b"),
                                     Value::list({})})),
            R"([a, "b", []])");
}

TEST(PrinterTest, FixtureAlreadyCanonicalStaysByteIdentical) {
  const std::string text = testing::read_file(testing::fixture("minimal.pdl"));
  EXPECT_EQ(print_canonical(parse(text, "minimal.pdl")), text);
}

TEST(PrinterProperty, CorpusRoundTripAndIdempotence) {
  for (const auto& path : testing::corpus()) {
    const auto doc = parse(testing::read_file(path), path.string());
    const std::string once = print_canonical(doc);
    const auto again = parse(once, path.string());
    EXPECT_EQ(again, doc) << path;
    EXPECT_EQ(print_canonical(again), once) << path;
  }
}

TEST(PrinterProperty, RandomDocumentsRoundTrip) {
  testing::DocGenerator gen(20261016);
  for (int i = 0; i < 300; ++i) {
    const auto doc = gen.document();
    const std::string text = print_canonical(doc);
    PipelineDocument back;
    ASSERT_NO_THROW(back = parse(text, "<generated>")) << text;
    ASSERT_EQ(back, doc) << text;
    ASSERT_EQ(print_canonical(back), text);
  }
}

}  // namespace
}  // namespace pdl

#include "qvira/table_format.hpp"

#include <gtest/gtest.h>

#include "qvira/errors.hpp"
#include "qvira/families.hpp"
#include "test_support.hpp"

namespace qvira {
namespace {

using testing_support::kQ;

const std::string kHeader =
    "vlq-table 1\n"
    "mode symbolic\n"
    "k-range 0 1\n"
    "dims 11\n"
    "h-range -1 1\n"
    "j-range -1 1\n";

ErrorCode parse_error(const std::string& text) {
  try {
    parse_table(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed without error:\n" << text;
  return ErrorCode::SemanticError;
}

TEST(TableFormatTest, MinimalDocument) {
  const TableDocument doc = parse_table(kHeader + "f 1 0 0 q^2 - 1\n");
  EXPECT_EQ(doc.version, 1);
  EXPECT_EQ(doc.k_range, (Range{0, 1}));
  EXPECT_EQ(doc.h_range, (Range{-1, 1}));
  ASSERT_EQ(doc.entries.size(), 1U);
  EXPECT_EQ(evaluate(doc.entries.at({1, 0, 0})), kQ * kQ - 1);
}

TEST(TableFormatTest, NumericModeLine) {
  const TableDocument doc = parse_table(
      "vlq-table 1\nmode numeric q=-3/2 a=5\nk-range 0 0\ndims 1\nh-range -1 1\nj-range -1 1\n");
  EXPECT_EQ(doc.mode, FieldContext::numeric(Rational(-3, 2), 5));
}

TEST(TableFormatTest, CommentsAndBlankLines) {
  const TableDocument doc = parse_table("# leading comment\n\n" + kHeader + "f 0 1 0 a  # trailing\r\n\n");
  EXPECT_EQ(doc.entries.size(), 1U);
}

TEST(TableFormatTest, SemanticErrors) {
  EXPECT_EQ(parse_error(kHeader + "f 0 0 1 q\n"), ErrorCode::SemanticError);
  EXPECT_EQ(parse_error(kHeader + "f 1 0 0 q\nf 1 0 0 a\n"), ErrorCode::SemanticError);
  EXPECT_EQ(parse_error(kHeader + "f 1 0 1 q\n"), ErrorCode::SemanticError);  // k+h outside the range
  EXPECT_EQ(parse_error(kHeader + "f 2 0 0 q\n"), ErrorCode::SemanticError);
  EXPECT_EQ(parse_error("vlq-table 2\nmode symbolic\nk-range 0 1\ndims 11\nh-range -1 1\nj-range -1 1\n"),
            ErrorCode::SemanticError);
  EXPECT_EQ(parse_error("vlq-table 1\nmode symbolic\nk-range 0 1\ndims 1\nh-range -1 1\nj-range -1 1\n"),
            ErrorCode::SemanticError);
  EXPECT_EQ(parse_error("vlq-table 1\nmode symbolic\nk-range 1 0\ndims 11\nh-range -1 1\nj-range -1 1\n"),
            ErrorCode::SemanticError);
  EXPECT_EQ(parse_error("vlq-table 1\nmode symbolic\nk-range 0 1\ndims 10\nh-range -1 1\nj-range -1 1\nf 1 0 0 q\n"),
            ErrorCode::SemanticError);
}

TEST(TableFormatTest, SyntaxErrorsPointAtLineAndColumn) {
  try {
    parse_table(kHeader + "f 1 0 0 q +\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 7U);
    EXPECT_EQ(e.column(), 12U);
  }
  try {
    parse_table("vlq-table 1\nmode weird\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2U);
    EXPECT_EQ(e.column(), 6U);
  }
  EXPECT_EQ(parse_error("vlq-table 1\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(kHeader + "f 1 0 x q\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(kHeader + "g 1 0 0 q\n"), ErrorCode::SyntaxError);
}

TEST(TableFormatTest, WriteHeaderOnly) {
  EXPECT_EQ(write_table(parse_table(kHeader)), kHeader);
}

TEST(TableFormatTest, WriteSortsEntries) {
  const std::string text = write_table(parse_table(kHeader + "f 1 0 0 (q^2-1)/(q-1)\nf -1 0 1 2*a/4\n"));
  EXPECT_EQ(text, kHeader + "f -1 0 1 (a)/(2)\nf 1 0 0 q + 1\n");
}

TEST(TableFormatTest, GeneratedTablesRoundTripByteIdentical) {
  for (const FieldContext& ctx : {FieldContext::symbolic(), FieldContext::numeric(Rational(-2, 3), 7)}) {
    for (Family f : kAllFamilies) {
      const std::string text = write_table(gen_table(f, RationalFunction::a() + 1, 2, 2, 3, ctx));
      const TableDocument doc = parse_table(text);
      EXPECT_EQ(write_table(doc), text);
      EXPECT_EQ(doc.mode, ctx);
    }
  }
}

}  // namespace
}  // namespace qvira

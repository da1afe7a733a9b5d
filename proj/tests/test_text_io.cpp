#include <gtest/gtest.h>

#include <sstream>

#include "exsum/errors.hpp"
#include "exsum/text_io.hpp"

namespace exsum {
namespace {

TEST(TextIo, ReadsRationalsWithComments) {
  std::istringstream in("# header\n1/2 3\n\n  -0.25 # trailing\n4/8\n");
  EXPECT_EQ(read_rationals(in, "mem"),
            (std::vector<Rat>{Rat(1, 2), Rat(3), Rat(-1, 4), Rat(1, 2)}));
}

TEST(TextIo, ParseErrorsNameSourceAndLine) {
  std::istringstream in("1\n2\n3/0\n");
  try {
    read_rationals(in, "A.txt");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(std::string(e.what()).rfind("A.txt:3: ", 0), 0u) << e.what();
  }
}

TEST(TextIo, ReadsFunctions) {
  std::istringstream in("0 1\n1/2 3 # c\n\n2 0\n");
  EXPECT_EQ(read_function(in, "F"), (SparseFn{{Rat(0), Rat(1)}, {Rat(1, 2), Rat(3)}}));
  std::istringstream dup("1 1\n1 2\n");
  EXPECT_THROW(read_function(dup, "F"), ParseError);
  std::istringstream short_line("1 1\n2\n");
  try {
    read_function(short_line, "F");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(TextIo, MissingFile) {
  try {
    read_rationals_file("/nonexistent/in.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 0u);
  }
  EXPECT_THROW(read_function_file("/nonexistent/in.txt"), ParseError);
}

}  // namespace
}  // namespace exsum

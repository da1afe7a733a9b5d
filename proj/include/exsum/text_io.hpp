#ifndef EXSUM_TEXT_IO_HPP
#define EXSUM_TEXT_IO_HPP

#include <istream>
#include <string>
#include <vector>

#include "exsum/rat.hpp"
#include "exsum/sets.hpp"

namespace exsum {

/// Every whitespace-separated token as a rational. `#` starts a comment
/// that runs to the end of the line. ParseError carries the 1-based line
/// and names `source` in its message.
std::vector<Rat> read_rationals(std::istream& in, const std::string& source);

/// Two tokens per non-blank line: point and value.
SparseFn read_function(std::istream& in, const std::string& source);

/// File variants; an unreadable file is a ParseError at line 0.
std::vector<Rat> read_rationals_file(const std::string& path);
SparseFn read_function_file(const std::string& path);

}  // namespace exsum

#endif  // EXSUM_TEXT_IO_HPP

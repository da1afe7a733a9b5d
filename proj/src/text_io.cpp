#include "exsum/text_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "exsum/errors.hpp"

namespace exsum {

namespace {

template <class PerLine>
void for_each_line(std::istream& in, const std::string& source, PerLine per_line) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string tok; words >> tok;) tokens.push_back(tok);
    try {
      per_line(tokens, number);
    } catch (const ParseError& e) {
      throw ParseError(source + ":" + std::to_string(number) + ": " + e.what(), number);
    } catch (const ContractError& e) {
      throw ParseError(source + ":" + std::to_string(number) + ": " + e.what(), number);
    }
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file", 0);
  return in;
}

}  // namespace

std::vector<Rat> read_rationals(std::istream& in, const std::string& source) {
  std::vector<Rat> out;
  for_each_line(in, source, [&](const std::vector<std::string>& tokens, std::size_t) {
    for (const std::string& tok : tokens) out.push_back(parse_rat(tok));
  });
  return out;
}

SparseFn read_function(std::istream& in, const std::string& source) {
  std::vector<SparseFn::Entry> entries;
  std::set<Rat> seen;
  for_each_line(in, source, [&](const std::vector<std::string>& tokens, std::size_t) {
    if (tokens.empty()) return;
    if (tokens.size() != 2) throw ParseError("expected `point value`");
    Rat x = parse_rat(tokens[0]);
    if (!seen.insert(x).second) throw ParseError("repeated point " + to_string(x));
    entries.emplace_back(std::move(x), parse_rat(tokens[1]));
  });
  return SparseFn(std::move(entries));
}

std::vector<Rat> read_rationals_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_rationals(in, path);
}

SparseFn read_function_file(const std::string& path) {
  std::ifstream in = open(path);
  return read_function(in, path);
}

}  // namespace exsum

#include "nsbound/ideal_file.hpp"

#include "nsbound/errors.hpp"
#include "nsbound/parser.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace nsbound {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos)
    return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

unsigned parse_header(std::string_view line, const std::string& source, std::size_t number) {
  std::istringstream in{std::string(line)};
  std::string keyword;
  long count = 0;
  std::string rest;
  if (!(in >> keyword >> count) || keyword != "vars" || (in >> rest))
    throw IdealFileError(source, number, "expected header 'vars N'");
  if (count < 2)
    throw IdealFileError(source, number, "need at least 2 variables");
  return static_cast<unsigned>(count - 1);
}

} // namespace

IdealPresentation parse_ideal_file(std::string_view text, const std::string& source) {
  std::optional<unsigned> r;
  std::vector<Polynomial> generators;
  std::size_t number = 0;
  std::size_t last = 0;
  while (last <= text.size()) {
    const std::size_t end = std::min(text.find('\n', last), text.size());
    std::string_view line = text.substr(last, end - last);
    last = end + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
      continue;
    if (!r) {
      r = parse_header(line, source, number);
      continue;
    }
    Polynomial p;
    try {
      p = parse_polynomial(line, *r);
    } catch (const ParseError& e) {
      throw IdealFileError(source, number, e.what());
    }
    if (p.is_zero())
      throw IdealFileError(source, number, "zero polynomial");
    if (!p.is_homogeneous())
      throw IdealFileError(source, number, "polynomial is not homogeneous");
    if (p.degree() == 0)
      throw IdealFileError(source, number, "constant generator (unit ideal)");
    generators.push_back(std::move(p));
  }
  if (!r)
    throw IdealFileError(source, number, "missing header 'vars N'");
  if (generators.empty())
    throw IdealFileError(source, number, "no generators");
  return IdealPresentation(*r, std::move(generators));
}

IdealPresentation load_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw IdealFileError(path, 0, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ideal_file(buffer.str(), path);
}

} // namespace nsbound

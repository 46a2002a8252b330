#pragma once

#include "nsbound/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsbound {

// Error in an ideal file, located by 1-based line number.
class IdealFileError : public std::runtime_error {
public:
  IdealFileError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

// Format:
//   # comment
//   vars 4              (number of variables r+1; the ambient space is P^r)
//   x0*x3 - x1*x2       (one homogeneous polynomial per line)
IdealPresentation parse_ideal_file(std::string_view text, const std::string& source = "<input>");
IdealPresentation load_ideal_file(const std::string& path);

} // namespace nsbound

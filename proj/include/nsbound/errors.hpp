#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsbound {

// Malformed polynomial or ideal text. `position` is a 0-based byte offset
// into the parsed string.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A configured budget (S-pairs, degree, recursion nodes) was exhausted.
class ResourceLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The ideal has an identically zero Hilbert polynomial (empty projective scheme).
class ImproperIdeal : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Greedy Macaulay expansion failed; `trace` holds the exponents accepted so far.
class NotAdmissible : public std::runtime_error {
public:
  NotAdmissible(const std::string& what, std::vector<unsigned> trace,
                std::string remainder)
      : std::runtime_error(what), trace_(std::move(trace)),
        remainder_(std::move(remainder)) {}

  const std::vector<unsigned>& trace() const { return trace_; }
  const std::string& remainder() const { return remainder_; }

private:
  std::vector<unsigned> trace_;
  std::string remainder_;
};

} // namespace nsbound

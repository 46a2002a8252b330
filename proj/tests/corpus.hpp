#pragma once

// Named test ideals with their known invariants.

#include "nsbound/parser.hpp"
#include "nsbound/poly.hpp"

#include <string>
#include <vector>

namespace corpus {

struct Entry {
  std::string name;
  unsigned r;
  std::vector<std::string> generators;
  unsigned dim;
  long degree;
  std::string hp; // dense form as printed by HilbertPolynomial::to_string
};

inline nsbound::IdealPresentation ideal(const Entry& e) {
  std::vector<nsbound::Polynomial> gens;
  for (const auto& g : e.generators)
    gens.push_back(nsbound::parse_polynomial(g, e.r));
  return nsbound::IdealPresentation(e.r, std::move(gens));
}

inline std::string fermat(unsigned r, unsigned d) {
  std::string out;
  for (unsigned i = 0; i <= r; ++i) {
    if (i)
      out += " + ";
    out += "x" + std::to_string(i) + "^" + std::to_string(d);
  }
  return out;
}

inline const std::vector<Entry>& varieties() {
  static const std::vector<Entry> entries = {
      {"quadric", 3, {"x0*x3 - x1*x2"}, 2, 2, "t^2+2t+1"},
      {"twisted cubic", 3, {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, 1, 3, "3t+1"},
      {"complete intersection (2,3)", 3, {fermat(3, 2), fermat(3, 3)}, 1, 6, "6t-3"},
      {"nodal cubic", 2, {"x1^2*x2 - x0^3 - x0^2*x2"}, 1, 3, "3t"},
      {"plane in P^3", 3, {"x3"}, 2, 1, "1/2t^2+3/2t+1"},
      {"two points in P^2", 2, {"x2", "x0*x1"}, 0, 2, "2"},
      {"three points in P^2", 2, {"x0*x1", "x0*x2", "x1*x2"}, 0, 3, "3"},
      {"two skew lines", 3, {"x0*x2", "x0*x3", "x1*x2", "x1*x3"}, 1, 2, "2t+2"},
      {"rational normal quartic",
       4,
       {"x0*x2 - x1^2", "x0*x3 - x1*x2", "x0*x4 - x1*x3", "x1*x3 - x2^2", "x1*x4 - x2*x3",
        "x2*x4 - x3^2"},
       1,
       4,
       "4t+1"},
      {"veronese surface",
       5,
       {"x0*x3 - x1^2", "x0*x4 - x1*x2", "x0*x5 - x2^2", "x1*x4 - x2*x3", "x1*x5 - x2*x4",
        "x3*x5 - x4^2"},
       2,
       4,
       "2t^2+3t+1"},
      {"segre P1xP2",
       5,
       {"x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"},
       3,
       3,
       "1/2t^3+2t^2+5/2t+1"},
      {"fermat cubic surface", 3, {fermat(3, 3)}, 2, 3, "3/2t^2+3/2t+1"},
      {"fermat quartic threefold", 4, {fermat(4, 4)}, 3, 4, "2/3t^3+t^2+7/3t+1"},
  };
  return entries;
}

} // namespace corpus

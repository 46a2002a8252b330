#pragma once

#include "nsbound/bounds.hpp"
#include "nsbound/gotzmann.hpp"
#include "nsbound/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace nsbound {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema = "ns-bound/1";

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json integer_to_json(const mpz_class& v);
mpz_class integer_from_json(const Json& j);

Json tower_to_json(const TowerNumber& x);
TowerNumber tower_from_json(const Json& j);

Json hilbert_polynomial_to_json(const HilbertPolynomial& p);
HilbertPolynomial hilbert_polynomial_from_json(const Json& j);

Json invariants_to_json(const VarietyInvariants& inv);
VarietyInvariants invariants_from_json(const Json& j);

Json gotzmann_to_json(const HilbertPolynomial& q, const GotzmannDecomposition& g);

Json report_to_json(const BoundReport& report);
BoundReport report_from_json(const Json& j);

Json outcome_to_json(const VerificationOutcome& o);

// Plain-text rendering for the terminal. Exact values print in full only
// when `exact_digits` is set.
std::string render_invariants(const VarietyInvariants& inv,
                              const std::optional<Smoothness>& smoothness);
std::string render_report(const BoundReport& report, bool exact_digits);

} // namespace nsbound

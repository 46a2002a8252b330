// ns-bound: invariants, torsion bounds and inequality checks for projective
// varieties given by homogeneous ideals.
//
// Exit codes: 0 success, 1 internal error, 2 usage or input error,
// 3 resource limit, 4 verification discrepancy.

#include "nsbound/bounds.hpp"
#include "nsbound/errors.hpp"
#include "nsbound/gotzmann.hpp"
#include "nsbound/ideal_file.hpp"
#include "nsbound/report.hpp"
#include "nsbound/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace nsbound;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_input = 2;
constexpr int exit_resource = 3;
constexpr int exit_discrepancy = 4;

struct GlobalOptions {
  long precision = BigFloat::default_precision;
  std::size_t max_pairs = GroebnerOptions{}.max_pairs;
  unsigned max_degree = GroebnerOptions{}.max_degree;

  GroebnerOptions groebner() const { return {max_pairs, max_degree}; }
  TowerContext tower() const {
    TowerContext ctx;
    ctx.precision = precision;
    return ctx;
  }
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void write_json(const std::string& path, const Json& j) {
  if (path.empty())
    return;
  if (path == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out)
    throw UsageError("cannot write " + path);
  out << j.dump(2) << '\n';
}

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = std::stol(text);
      return {v, v};
    }
    return {std::stol(text.substr(0, dots)), std::stol(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("bad range '" + text + "', expected A..B");
  }
}

std::vector<mpz_class> parse_coefficient_list(const std::string& text) {
  std::vector<mpz_class> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    mpz_class v;
    if (v.set_str(item, 10) != 0)
      throw UsageError("bad coefficient '" + item + "' in --hp-binomial");
    out.push_back(v);
  }
  return out;
}

// invariants ------------------------------------------------------------

struct InvariantsArgs {
  std::string file;
  bool check_smooth = false;
  std::string json;
};

int run_invariants(const InvariantsArgs& args, const GlobalOptions& g) {
  const IdealPresentation ideal = load_ideal_file(args.file);
  const VarietyInvariants inv = invariants(ideal, MonomialOrder{}, g.groebner());
  std::optional<Smoothness> smooth;
  if (args.check_smooth)
    smooth = smoothness_check(ideal, g.groebner());
  if (args.json != "-")
    std::cout << render_invariants(inv, smooth);
  Json j{{"schema", report_schema}};
  const Json fields = invariants_to_json(inv);
  for (const auto& [k, v] : fields.items())
    j[k] = v;
  if (smooth)
    j["smoothness"] = to_string(*smooth);
  write_json(args.json, j);
  return exit_ok;
}

// bound -----------------------------------------------------------------

struct BoundArgs {
  std::string file;
  bool closed_form_only = false;
  bool check_smooth = false;
  bool exact = false;
  std::string json;
};

int run_bound(const BoundArgs& args, const GlobalOptions& g) {
  const IdealPresentation ideal = load_ideal_file(args.file);
  PipelineOptions opts;
  opts.groebner = g.groebner();
  opts.tower = g.tower();
  opts.check_smooth = args.check_smooth;
  opts.closed_form_only = args.closed_form_only;
  const BoundReport report = full_pipeline(ideal, opts);
  if (args.json != "-")
    std::cout << render_report(report, args.exact);
  write_json(args.json, report_to_json(report));
  return exit_ok;
}

// gotzmann --------------------------------------------------------------

struct GotzmannArgs {
  std::string hp;
  std::string hp_binomial;
  std::string file;
  std::string json;
};

int run_gotzmann(const GotzmannArgs& args, const GlobalOptions& g) {
  const int given = !args.hp.empty() + !args.hp_binomial.empty() + !args.file.empty();
  if (given != 1)
    throw UsageError("give exactly one of --hp, --hp-binomial or FILE");
  HilbertPolynomial q;
  if (!args.hp.empty())
    q = parse_hilbert_polynomial(args.hp);
  else if (!args.hp_binomial.empty())
    q = HilbertPolynomial(parse_coefficient_list(args.hp_binomial));
  else
    q = invariants(load_ideal_file(args.file), MonomialOrder{}, g.groebner()).hp;

  try {
    const GotzmannDecomposition dec = gotzmann_decomposition(q);
    const Json j = gotzmann_to_json(q, dec);
    if (args.json != "-") {
      std::cout << "Q = " << q.to_string() << "\n";
      if (j.contains("decomposition"))
        std::cout << "decomposition " << j["decomposition"].dump() << "\n";
      std::cout << "runs " << j["runs"].dump() << "\n";
      std::cout << "phi = " << dec.length().get_str() << "\n";
    }
    write_json(args.json, j);
    return exit_ok;
  } catch (const NotAdmissible& e) {
    Json j{{"hp", q.to_string()},
           {"error", "not admissible"},
           {"trace", e.trace()},
           {"remainder", e.remainder()}};
    write_json(args.json, j);
    std::cerr << "ns-bound: " << e.what() << "\n  greedy trace " << j["trace"].dump()
              << ", remainder " << e.remainder() << "\n";
    return exit_input;
  }
}

// verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string r = "3..8";
  std::string d = "2..8";
  std::vector<std::string> only;
  std::string json;
};

const std::vector<std::string> kCheckNames = {"binom", "hilbert_scheme", "effective_divisor", "compare", "hoa",
                                              "gotzmann"};

std::vector<IdealPresentation> fermat_corpus(const GridSpec& grid) {
  std::vector<IdealPresentation> out;
  for (long r = std::max(grid.r.lo, 2L); r <= std::min(grid.r.hi, 5L); ++r) {
    for (long d = std::max(grid.d.lo, 1L); d <= std::min(grid.d.hi, 5L); ++d) {
      Polynomial f = Polynomial::monomial(Monomial::variable(r + 1, 0, d));
      for (long i = 1; i <= r; ++i)
        f += Polynomial::monomial(Monomial::variable(r + 1, i, d));
      out.emplace_back(r, std::vector<Polynomial>{f});
    }
  }
  return out;
}

int run_verify(const VerifyArgs& args, const GlobalOptions& g) {
  GridSpec grid;
  grid.r = parse_range(args.r);
  grid.d = parse_range(args.d);
  grid.precision = g.precision;
  if (grid.r.empty() || grid.d.empty())
    throw UsageError("empty --r or --d range");

  std::vector<std::string> selected = args.only.empty() ? kCheckNames : args.only;
  for (const auto& name : selected)
    if (std::find(kCheckNames.begin(), kCheckNames.end(), name) == kCheckNames.end())
      throw UsageError("unknown check '" + name + "'");
  const bool chains_only_binom = selected.size() == 1 && selected[0] == "binom";
  if (grid.r.lo < 2)
    throw UsageError("r must be at least 2");
  if (grid.r.lo < 3 && !chains_only_binom)
    throw UsageError("the bound chains need r >= 3 (use --only binom for r = 2)");
  if (grid.d.lo < 2)
    throw UsageError("d must be at least 2");

  std::vector<std::pair<std::string, std::vector<VerificationOutcome>>> results;
  for (const auto& name : selected) {
    if (name == "binom")
      results.emplace_back(name, binom_grid(grid));
    else if (name == "hilbert_scheme")
      results.emplace_back(name, hilbert_scheme_grid(grid));
    else if (name == "effective_divisor")
      results.emplace_back(name, effective_divisor_grid(grid));
    else if (name == "compare")
      results.emplace_back(name, compare_bounds_grid(grid));
    else if (name == "hoa")
      results.emplace_back(name, hoa_grid(grid));
    else if (name == "gotzmann")
      results.emplace_back(name, check_gotzmann_vs_hoa(fermat_corpus(grid), grid.precision));
  }

  Json checks = Json::object();
  Json summary = Json::object();
  Json discrepancies = Json::array();
  bool all_hold = true;
  for (const auto& [name, outcomes] : results) {
    Json list = Json::array();
    std::size_t holds = 0;
    for (const auto& o : outcomes) {
      list.push_back(outcome_to_json(o));
      if (o.holds)
        ++holds;
      else
        discrepancies.push_back(outcome_to_json(o));
    }
    all_hold = all_hold && holds == outcomes.size();
    checks[name] = std::move(list);
    summary[name] = {{"total", outcomes.size()}, {"holds", holds}};
    if (args.json != "-")
      std::cout << name << ": " << holds << "/" << outcomes.size() << " hold\n";
  }
  if (args.json != "-" && !discrepancies.empty()) {
    std::cout << "discrepancies\n";
    for (const auto& o : discrepancies)
      std::cout << "  " << o["check"].get<std::string>() << " " << o["params"].dump() << ": "
                << o["left"].get<std::string>() << " vs " << o["right"].get<std::string>()
                << (o.contains("note") ? "  (" + o["note"].get<std::string>() + ")" : "")
                << "\n";
  }
  Json j{{"schema", report_schema},
         {"grid",
          {{"r", {grid.r.lo, grid.r.hi}},
           {"d", {grid.d.lo, grid.d.hi}},
           {"t_samples", grid.t_samples},
           {"precision", grid.precision}}},
         {"summary", std::move(summary)},
         {"all_hold", all_hold},
         {"discrepancies", std::move(discrepancies)},
         {"checks", std::move(checks)}};
  write_json(args.json, j);
  return all_hold ? exit_ok : exit_discrepancy;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants and Néron-Severi torsion bounds for projective varieties"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--precision", global.precision, "Working precision in bits")
      ->check(CLI::Range(16L, 1L << 20))
      ->capture_default_str();
  app.add_option("--max-pairs", global.max_pairs, "S-pair budget for Buchberger")
      ->capture_default_str();
  app.add_option("--max-degree", global.max_degree, "Degree cap for Buchberger")
      ->capture_default_str();

  InvariantsArgs inv_args;
  auto* inv_cmd = app.add_subcommand("invariants", "Dimension, degree and Hilbert polynomial");
  inv_cmd->fallthrough();
  inv_cmd->add_option("FILE", inv_args.file, "Ideal file")->required();
  inv_cmd->add_flag("--check-smooth", inv_args.check_smooth, "Run the Jacobian criterion");
  inv_cmd->add_option("--json", inv_args.json, "Write JSON to PATH ('-' for stdout)");

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("bound", "All torsion bounds for the variety");
  bound_cmd->fallthrough();
  bound_cmd->add_option("FILE", bound_args.file, "Ideal file")->required();
  bound_cmd->add_flag("--paper-faithful", bound_args.closed_form_only,
                      "Only the worst-case closed-form substitutions");
  bound_cmd->add_flag("--check-smooth", bound_args.check_smooth, "Run the Jacobian criterion");
  bound_cmd->add_flag("--exact", bound_args.exact, "Print exact values in full");
  bound_cmd->add_option("--json", bound_args.json, "Write JSON to PATH ('-' for stdout)");

  GotzmannArgs gz_args;
  auto* gz_cmd = app.add_subcommand("gotzmann", "Gotzmann decomposition of a Hilbert polynomial");
  gz_cmd->fallthrough();
  gz_cmd->add_option("--hp", gz_args.hp, "Polynomial in t, e.g. \"2t+1\"");
  gz_cmd->add_option("--hp-binomial", gz_args.hp_binomial,
                     "Coefficients c0,c1,... of binom(t+j, j)");
  gz_cmd->add_option("FILE", gz_args.file, "Ideal file (uses its Hilbert polynomial)");
  gz_cmd->add_option("--json", gz_args.json, "Write JSON to PATH ('-' for stdout)");

  VerifyArgs ver_args;
  auto* ver_cmd = app.add_subcommand("verify", "Check the inequality chains over a grid");
  ver_cmd->fallthrough();
  ver_cmd->add_option("--r", ver_args.r, "Range A..B of r")->capture_default_str();
  ver_cmd->add_option("--d", ver_args.d, "Range A..B of d")->capture_default_str();
  ver_cmd->add_option("--only", ver_args.only,
                      "Restrict to checks: binom, hilbert_scheme, effective_divisor, compare, hoa, gotzmann");
  ver_cmd->add_option("--json", ver_args.json, "Write JSON to PATH ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*inv_cmd)
      return run_invariants(inv_args, global);
    if (*bound_cmd)
      return run_bound(bound_args, global);
    if (*gz_cmd)
      return run_gotzmann(gz_args, global);
    if (*ver_cmd)
      return run_verify(ver_args, global);
  } catch (const ResourceLimit& e) {
    std::cerr << "ns-bound: resource limit: " << e.what() << "\n";
    return exit_resource;
  } catch (const NotAdmissible& e) {
    std::cerr << "ns-bound: " << e.what() << "\n";
    return exit_input;
  } catch (const IdealFileError& e) {
    std::cerr << "ns-bound: " << e.what() << "\n";
    return exit_input;
  } catch (const ParseError& e) {
    std::cerr << "ns-bound: parse error: " << e.what() << "\n";
    return exit_input;
  } catch (const ImproperIdeal& e) {
    std::cerr << "ns-bound: improper ideal: " << e.what() << "\n";
    return exit_input;
  } catch (const UsageError& e) {
    std::cerr << "ns-bound: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ns-bound: invalid input: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "ns-bound: error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_internal;
}

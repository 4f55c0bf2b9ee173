// chern-index: Chern class image indices for SL_n / mu_ell.
//
// Exit codes: 0 success, 2 expectation mismatch, 3 audit violation,
// 64 usage error, 70 internal invariant violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chern/indices.hpp"
#include "chern/kulattice.hpp"
#include "chern/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitViolation = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

long parse_long(const std::string& s, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  }
  if (used != s.size()) throw UsageError(std::string("invalid ") + what + ": '" + s + "'");
  return v;
}

// "3", "2,3,5" or "1..8" (inclusive), and comma-separated mixtures.
std::vector<long> parse_list(const std::string& spec, const char* what) {
  std::vector<long> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t comma = spec.find(',', start);
    const std::string item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (const auto dots = item.find(".."); dots != std::string::npos) {
      const long lo = parse_long(item.substr(0, dots), what);
      const long hi = parse_long(item.substr(dots + 2), what);
      if (hi < lo) throw UsageError(std::string("empty range for ") + what + ": '" + item + "'");
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_long(item, what));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct RunConfig {
  std::string ell = "";
  std::string k = "";
  int degree = 2;
  std::optional<long> max_size;
  std::string format = "text";
  std::optional<unsigned long> claim;
  std::string expect;
  bool expect_given = false;
};

long resolve_max_size(const RunConfig& cfg) {
  long v = chern::kDefaultMaxSize;
  if (const char* env = std::getenv("CHERN_INDEX_MAX_SIZE"); env && *env) {
    v = parse_long(env, "CHERN_INDEX_MAX_SIZE");
    if (v < 1) throw UsageError("CHERN_INDEX_MAX_SIZE must be a positive integer");
  }
  if (cfg.max_size) v = *cfg.max_size;
  if (v < 0) throw UsageError("--max-size must be non-negative");
  return v;
}

chern::OutputFormat resolve_format(const std::string& f) {
  if (f == "json") return chern::OutputFormat::json;
  if (f == "csv") return chern::OutputFormat::csv;
  if (f == "text") return chern::OutputFormat::text;
  throw UsageError("unknown format '" + f + "'");
}

chern::GroupParams single_params(const RunConfig& cfg) {
  if (cfg.ell.empty() || cfg.k.empty()) throw UsageError("--ell and --k are required");
  return chern::GroupParams(parse_long(cfg.ell, "--ell"), parse_long(cfg.k, "--k"));
}

// Returns the value --expect asks for: its argument, or the tabulated target.
std::optional<chern::ExactInt> expectation(const RunConfig& cfg, const std::optional<chern::ExactInt>& target) {
  if (!cfg.expect_given) return std::nullopt;
  if (!cfg.expect.empty()) return chern::ExactInt(parse_long(cfg.expect, "--expect"));
  if (!target) throw UsageError("--expect without a value needs a tabulated target, and these parameters have none");
  return target;
}

int expectation_exit(const std::optional<chern::ExactInt>& expected, const chern::ExactInt& got) {
  if (expected && *expected != got) {
    std::cerr << "expected generator " << *expected << ", computed " << got << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_index(const RunConfig& cfg) {
  const auto params = single_params(cfg);
  const long bound = resolve_max_size(cfg);
  if (cfg.degree != 2 && cfg.degree != 3) throw UsageError("--degree must be 2 or 3");
  if (bound < cfg.degree) throw UsageError("--max-size must be at least the degree");
  const auto report = cfg.degree == 2 ? chern::chow2_index(params, bound) : chern::chow3_index(params, bound);
  const auto expected = expectation(cfg, report.paper_target);
  chern::write(std::cout, report, resolve_format(cfg.format));
  return expectation_exit(expected, report.image_generator);
}

int cmd_sweep(const RunConfig& cfg) {
  if (cfg.ell.empty() || cfg.k.empty()) throw UsageError("--ell and --k are required");
  const long bound = resolve_max_size(cfg);
  if (bound < 2) throw UsageError("--max-size must be at least 2 for a sweep");
  const auto fmt = resolve_format(cfg.format);
  std::vector<chern::GroupParams> cells;
  for (long ell : parse_list(cfg.ell, "--ell"))
    for (long k : parse_list(cfg.k, "--k")) cells.emplace_back(ell, k);
  std::vector<chern::SweepRow> rows;
  rows.reserve(cells.size());
  for (const auto& p : cells) rows.push_back(chern::sweep_cell(p, bound));
  chern::write(std::cout, rows, fmt);
  return kExitOk;
}

int cmd_audit(const RunConfig& cfg) {
  const auto params = single_params(cfg);
  if (!cfg.claim) throw UsageError("--claim is required");
  if (cfg.degree != 2 && cfg.degree != 3) throw UsageError("--degree must be 2 or 3");
  const auto report = chern::divisibility_audit(params, cfg.degree, *cfg.claim, resolve_max_size(cfg));
  chern::write(std::cout, report, resolve_format(cfg.format));
  return report.passed() ? kExitOk : kExitViolation;
}

int cmd_witness(const RunConfig& cfg) {
  const auto params = single_params(cfg);
  if (cfg.degree != 2 && cfg.degree != 3) throw UsageError("--degree must be 2 or 3");
  const auto result = chern::find_witness(params, cfg.degree, resolve_max_size(cfg));
  chern::write(std::cout, result, resolve_format(cfg.format));
  return result.verified ? kExitOk : kExitMismatch;
}

int cmd_ku(const RunConfig& cfg) {
  const auto params = single_params(cfg);
  const long bound = resolve_max_size(cfg);
  if (bound < 2) throw UsageError("--max-size must be at least 2");
  const auto report = chern::ku_report(params, bound);
  const auto expected = expectation(cfg, report.paper_target);
  chern::write(std::cout, report, resolve_format(cfg.format));
  return expectation_exit(expected, report.ku6_generator);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chern class image indices for SL_n/mu_ell, n = k*ell"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub, bool with_degree) {
    sub->add_option("--ell", cfg.ell, "prime ell (sweep: list such as 2,3,5 or range 2..7)")->required();
    sub->add_option("--k", cfg.k, "k >= 1 with n = k*ell (sweep: list or range such as 1..8)")->required();
    if (with_degree) sub->add_option("--degree", cfg.degree, "Chern degree, 2 or 3")->capture_default_str();
    sub->add_option("--max-size", cfg.max_size,
                    "largest multiset size enumerated (default 4, or CHERN_INDEX_MAX_SIZE)");
    sub->add_option("--format", cfg.format, "json, csv or text")->capture_default_str();
  };

  auto* index = app.add_subcommand("index", "image of Ch^2 or Ch^3 in Z*c_i");
  common(index, true);
  auto* expect_index = index->add_option("--expect", cfg.expect,
                                         "exit 2 unless the generator equals this value (no value: tabulated target)")
                           ->expected(0, 1);

  auto* sweep = app.add_subcommand(
      "sweep",
      "h4 index, Ch^2 and Ch^3 generators over a grid of (ell, k).\n"
      "CSV columns: ell,k,n,bound,h4_index,chow2_generator,chow3_generator,counterexample,stabilized");
  common(sweep, false);

  auto* audit = app.add_subcommand("audit", "check v_ell(C_degree) >= claim on every enumerated basis element");
  common(audit, true);
  audit->add_option("--claim", cfg.claim, "claimed minimal ell-adic valuation")->required();

  auto* witness = app.add_subcommand("witness", "designated witness realising the index");
  common(witness, true);

  auto* ku = app.add_subcommand("ku", "image of ku^6(BG) in Z*c3 via the C2 = 0 lattice");
  common(ku, false);
  auto* expect_ku = ku->add_option("--expect", cfg.expect,
                                   "exit 2 unless the ku6 generator equals this value (no value: tabulated target)")
                        ->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (index->parsed()) {
      cfg.expect_given = expect_index->count() > 0;
      return cmd_index(cfg);
    }
    if (sweep->parsed()) return cmd_sweep(cfg);
    if (audit->parsed()) return cmd_audit(cfg);
    if (witness->parsed()) return cmd_witness(cfg);
    if (ku->parsed()) {
      cfg.expect_given = expect_ku->count() > 0;
      return cmd_ku(cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const chern::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

#include "cli_app.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lazyq/belldiag.hpp"
#include "lazyq/classify.hpp"
#include "lazyq/dynamics.hpp"
#include "lazyq/families.hpp"
#include "lazyq/state_io.hpp"

namespace lazyq::cli {

using nlohmann::json;

namespace {

constexpr const char* kVersion = LAZYQ_VERSION;

/// Raised for malformed flag values that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json classification_json(const Classification& c, double tol) {
  json j;
  j["tool"] = "lazyq";
  j["version"] = kVersion;
  j["tolerance"] = tol;
  j["physical"] = c.physical;
  j["pure"] = optional_bool(c.pure);
  j["product"] = optional_bool(c.product);
  j["zero_discord_a"] = optional_bool(c.zero_discord_a);
  j["discord_a"] = c.zero_discord_a ? json(*c.zero_discord_a ? "zero" : "nonzero") : json(nullptr);
  j["lazy_a"] = optional_bool(c.lazy_a);
  j["lazy_gray_zone"] = c.lazy_gray_zone;
  j["separable"] = optional_bool(c.separable);
  j["singular_values"] = c.singular_values;
  j["discord_direction"] = c.discord_direction ? json(*c.discord_direction) : json(nullptr);
  j["witnesses"] = {
      {"commutator_norm", c.witnesses.commutator_norm},
      {"parallel_residual", c.witnesses.parallel_residual},
      {"negativity", c.witnesses.negativity},
      {"min_eigenvalue", c.witnesses.min_eigenvalue},
      {"product_residual", c.witnesses.product_residual},
  };
  return j;
}

// Prints -0.0 as 0.0 so outputs do not depend on the sign of rounded zeros.
json vec_json(const Vec3& v) { return {v[0] + 0.0, v[1] + 0.0, v[2] + 0.0}; }

json matrix3_json(const RealMatrix3& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back(vec_json(m.row(i)));
  return rows;
}

Vec3 parse_lambda(const std::string& text) {
  Vec3 v{};
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 3) throw UsageError("--lambda: expected three comma-separated numbers");
    std::size_t used = 0;
    try {
      v[n] = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("--lambda: cannot parse '" + item + "'");
    }
    if (used != item.size()) throw UsageError("--lambda: cannot parse '" + item + "'");
    ++n;
  }
  if (n != 3) throw UsageError("--lambda: expected three comma-separated numbers");
  for (double l : v)
    if (!(std::abs(l) <= 1.0)) throw UsageError("--lambda: components must lie in [-1, 1]");
  return v;
}

int report_unphysical(std::ostream& err, const std::string& path, const std::string& reason) {
  err << "lazyq: " << path << ": invalid state: " << reason << '\n';
  return kInvalidState;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify two-qubit states by laziness, discord and entanglement", "lazyq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  double tol = kDefaultTol;

  // classify
  std::string classify_path;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a state file (JSON output)");
  classify_cmd->add_option("state", classify_path, "State file")->required();
  classify_cmd->add_option("--tol", tol, "Residual tolerance")->capture_default_str();

  // normal-form
  std::string nf_path;
  auto* nf_cmd = app.add_subcommand("normal-form", "Local-rotation normal form of a state file");
  nf_cmd->add_option("state", nf_path, "State file")->required();

  // bd
  auto* bd_cmd = app.add_subcommand("bd", "Bell-diagonal geometry");
  bd_cmd->require_subcommand(1);
  std::string lambda_text;
  auto* bd_classify = bd_cmd->add_subcommand("classify", "Region label of a Bell-diagonal point");
  bd_classify->add_option("--lambda", lambda_text, "l1,l2,l3 in [-1,1]")->required();
  bd_classify->add_option("--tol", tol, "Boundary tolerance")->capture_default_str();
  std::uint64_t samples = 1000000, seed = 0;
  unsigned threads = 0;
  auto* bd_census_cmd = bd_cmd->add_subcommand("census", "Monte Carlo census of the cube (CSV)");
  bd_census_cmd->add_option("--samples", samples, "Number of samples")->capture_default_str()
      ->check(CLI::PositiveNumber);
  bd_census_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
  bd_census_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  int axis = 3;
  double value = 0.0;
  std::size_t grid = 21;
  auto* bd_slice_cmd = bd_cmd->add_subcommand("slice", "Region labels on a plane l_axis = value (CSV)");
  bd_slice_cmd->add_option("--axis", axis, "Fixed axis (1, 2 or 3)")->capture_default_str()
      ->check(CLI::Range(1, 3));
  bd_slice_cmd->add_option("--value", value, "Fixed coordinate in [-1,1]")->capture_default_str()
      ->check(CLI::Range(-1.0, 1.0));
  bd_slice_cmd->add_option("--grid", grid, "Points per free axis (>= 2)")->capture_default_str()
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));

  // family
  auto* family_cmd = app.add_subcommand("family", "Generate witness-family states");
  family_cmd->require_subcommand(1);
  std::string out_path;
  LazyDiscordantParams ld;
  auto* ld_cmd = family_cmd->add_subcommand("lazy-discordant", "1/4(I + y1 I s1 + l2 s2 s2 + l3 s3 s3)");
  ld_cmd->add_option("--y1", ld.y1, "Bloch component y1")->required();
  ld_cmd->add_option("--l2", ld.lambda2, "lambda2")->required();
  ld_cmd->add_option("--l3", ld.lambda3, "lambda3")->required();
  ld_cmd->add_option("--out", out_path, "Output state file");
  SeparableFamilyParams sp;
  auto* sep_cmd = family_cmd->add_subcommand(
      "separable", "p |psi1><psi1| rho1 + (1-p) |psi2><psi2| rho2; angles in radians");
  sep_cmd->add_option("--p", sp.p, "Mixing weight in (0,1)")->required();
  sep_cmd->add_option("--alpha", sp.alpha, "Angle between psi1 and psi2 Bloch vectors, radians in [0,pi]")->required();
  sep_cmd->add_option("--beta", sp.beta, "Polar angle of rho2, radians in [0,pi]")->required();
  sep_cmd->add_option("--a", sp.a, "Bloch length of rho1 in [0,1]")->required();
  sep_cmd->add_option("--b", sp.b, "Bloch length of rho2 in [0,1]")->required();
  sep_cmd->add_option("--out", out_path, "Output state file");
  sep_cmd->add_option("--tol", tol, "Case-boundary tolerance")->capture_default_str();

  // dynamics-check
  std::string dyn_path;
  std::size_t n_hamiltonians = 20;
  double step = kDefaultStep;
  std::uint64_t dyn_seed = 0;
  auto* dyn_cmd = app.add_subcommand("dynamics-check", "Entropy rate of A under random couplings");
  dyn_cmd->add_option("state", dyn_path, "State file")->required();
  dyn_cmd->add_option("--hamiltonians", n_hamiltonians, "Number of sampled couplings")->capture_default_str();
  dyn_cmd->add_option("--seed", dyn_seed, "Seed")->capture_default_str();
  dyn_cmd->add_option("--step", step, "Central-difference step (<= 1e-3)")->capture_default_str();
  dyn_cmd->add_option("--tol", tol, "Laziness tolerance")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      const TwoQubitState rho = read_state_file(classify_path);
      const Classification c = classify(rho, tol);
      if (!c.physical) return report_unphysical(err, classify_path, c.reason);
      out << classification_json(c, tol).dump(2) << '\n';
      return kOk;
    }

    if (nf_cmd->parsed()) {
      const TwoQubitState rho = read_state_file(nf_path);
      const NormalForm nf = normal_form(decompose(rho));
      json j{{"x_rot", vec_json(nf.x_rot)}, {"y_rot", vec_json(nf.y_rot)}, {"d", vec_json(nf.d)},
             {"sigma", vec_json(nf.sigma)},
             {"o_a", matrix3_json(nf.o_a)}, {"o_b", matrix3_json(nf.o_b)},
             {"tool", "lazyq"}, {"version", kVersion}};
      out << j.dump(2) << '\n';
      return kOk;
    }

    if (bd_classify->parsed()) {
      const BellDiagPoint p{parse_lambda(lambda_text)};
      out << to_string(bd_region(p, tol)) << '\n';
      return kOk;
    }
    if (bd_census_cmd->parsed()) {
      write_census_csv(out, bd_census(samples, seed, threads), kVersion);
      return kOk;
    }
    if (bd_slice_cmd->parsed()) {
      write_slice_csv(out, bd_slice(axis, value, grid));
      return kOk;
    }

    if (ld_cmd->parsed()) {
      TwoQubitState rho = TwoQubitState::maximally_mixed();
      try {
        rho = lazy_discordant_compose(ld);
      } catch (const FamilyParameterError& e) {
        err << "lazyq: " << e.what() << '\n';
        return kInvalidState;
      }
      if (!out_path.empty()) write_state_file(out_path, rho);
      json j{{"family", "lazy-discordant"},
             {"params", {{"y1", ld.y1}, {"lambda2", ld.lambda2}, {"lambda3", ld.lambda3}}},
             {"spectrum", lazy_discordant_spectrum(ld)},
             {"out", out_path.empty() ? json(nullptr) : json(out_path)}};
      if (out_path.empty()) j["state"] = state_to_json(rho);
      out << j.dump(2) << '\n';
      return kOk;
    }
    if (sep_cmd->parsed()) {
      TwoQubitState rho = TwoQubitState::maximally_mixed();
      SeparableLabel label = SeparableLabel::not_lazy;
      try {
        rho = separable_compose(sp);
        label = separable_classify(sp, tol);
      } catch (const FamilyParameterError& e) {
        err << "lazyq: " << e.what() << '\n';
        return kInvalidState;
      }
      if (!out_path.empty()) write_state_file(out_path, rho);
      json j{{"family", "separable"},
             {"params", {{"p", sp.p}, {"alpha", sp.alpha}, {"beta", sp.beta}, {"a", sp.a}, {"b", sp.b}}},
             {"label", to_string(label)},
             {"boundary_distance", separable_boundary_distance(sp)},
             {"tolerance", tol},
             {"fano", fano_to_json(separable_fano(sp))},
             {"out", out_path.empty() ? json(nullptr) : json(out_path)}};
      if (out_path.empty()) j["state"] = state_to_json(rho);
      out << j.dump(2) << '\n';
      return kOk;
    }

    if (dyn_cmd->parsed()) {
      if (!(step > 0.0 && step <= 1e-3)) {
        err << "lazyq: --step must lie in (0, 1e-3]\n";
        return kUsage;
      }
      const TwoQubitState rho = read_state_file(dyn_path);
      const Physicality ph = validate(rho);
      if (!ph.physical) return report_unphysical(err, dyn_path, ph.reason);
      const DynamicsCheck d = laziness_dynamics_check(rho, n_hamiltonians, dyn_seed, step, {}, tol);
      json rates = json::array();
      for (const auto& r : d.rates) rates.push_back({{"seed", r.seed}, {"rate", r.rate}, {"caution", r.caution}});
      const char* verdict = d.verdict == DynamicsVerdict::consistent   ? "consistent"
                            : d.verdict == DynamicsVerdict::gray_zone ? "gray_zone"
                                                                      : "inconsistent";
      json j{{"max_abs_rate", d.max_abs_rate},
             {"lazy", d.lazy},
             {"commutator_norm", d.commutator_norm},
             {"verdict", verdict},
             {"consistent", d.consistent_with_classifier()},
             {"step", step},
             {"seed", dyn_seed},
             {"rates", std::move(rates)},
             {"tool", "lazyq"},
             {"version", kVersion}};
      out << j.dump(2) << '\n';
      return d.consistent_with_classifier() ? kOk : kInconsistent;
    }
  } catch (const StateFormatError& e) {
    err << "lazyq: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "lazyq: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidStateError& e) {
    err << "lazyq: invalid state: " << e.what() << '\n';
    return kInvalidState;
  } catch (const ConsistencyError& e) {
    err << "lazyq: consistency failure: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "lazyq: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    // Anything else (I/O failures) maps onto the usage code so the exit
    // status stays within the documented set.
    err << "lazyq: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lazyq::cli

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "seedpdc/errors.hpp"
#include "seedpdc/oracle_check.hpp"
#include "seedpdc/quantifiers.hpp"
#include "seedpdc/region_scan.hpp"

namespace {

using nlohmann::json;
using namespace seedpdc;

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,
  kUsage = 2,
  kUndefined = 3,
  kIo = 4,
  kTruncation = 5,
};

struct PointFlags {
  std::string family;
  double sa = 0.0, sb = 0.0, gain = 0.0;
  double phase_r = 0.0;
  double zeta_a = 0.0, zeta_b = 0.0, phi = 0.0;
};

const std::vector<std::string> kFamilies = {"thermal", "coherent", "squeezed"};

void add_seed_flags(CLI::App* cmd, PointFlags& p, bool need_gain) {
  cmd->add_option("--family", p.family, "Seed family")
      ->required()
      ->check(CLI::IsMember(kFamilies));
  cmd->add_option("--sa", p.sa, "Seed intensity of mode A (mu, M or N_s)")->required();
  cmd->add_option("--sb", p.sb, "Seed intensity of mode B (mu, M or N_s)")->required();
  auto* gain = cmd->add_option("--gain", p.gain, "Spontaneous PDC photon number N");
  if (need_gain) gain->required();
  cmd->add_option("--phase-r", p.phase_r, "gamma_A + gamma_B - phi for coherent seeds (rad)");
  cmd->add_option("--zeta-a", p.zeta_a, "Squeezing phase of seed A (rad)");
  cmd->add_option("--zeta-b", p.zeta_b, "Squeezing phase of seed B (rad)");
  cmd->add_option("--phi", p.phi, "PDC phase for squeezed seeds (rad)");
}

SeededPdcConfig to_config(const PointFlags& p) {
  return SeededPdcConfig::from_family(parse_family(p.family), p.sa, p.sb, p.gain, p.phase_r,
                                      p.zeta_a, p.zeta_b, p.phi);
}

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json threshold_json(const ThresholdValue& t) { return t.value; }

int run_quantify(const PointFlags& p) {
  const SeededPdcConfig cfg = to_config(p);
  const QuantifierReport q = classify(cfg);
  const json out = {
      {"family", p.family},
      {"s_a", p.sa},
      {"s_b", p.sb},
      {"n_pdc", p.gain},
      {"mean_a", q.moments.mean_a},
      {"mean_b", q.moments.mean_b},
      {"var_diff", q.moments.var_diff},
      {"p_ssn", q.p_ssn},
      {"p_lee", q.p_lee},
      {"p_ent", opt_json(q.p_ent)},
      {"d_minus", q.d_minus},
      {"flags",
       {{"is_ssn", q.flags.is_ssn},
        {"is_lee_nonclassical", q.flags.is_lee_nonclassical},
        {"is_entangled", q.flags.is_entangled}}},
  };
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int run_threshold(const PointFlags& p) {
  const SeededPdcConfig cfg = to_config(p);
  const ThresholdReport t = thresholds(cfg);
  json out = {
      {"family", p.family},
      {"s_a", p.sa},
      {"s_b", p.sb},
      {"n_ssn", threshold_json(t.n_ssn)},
      {"n_lee", threshold_json(t.n_lee)},
      {"n_ent", t.n_ent ? threshold_json(*t.n_ent) : json(nullptr)},
      {"always_nonclassical",
       {{"ssn", t.n_ssn.always},
        {"lee", t.n_lee.always},
        {"ent", t.n_ent ? json(t.n_ent->always) : json(nullptr)}}},
  };
  std::cout << out.dump(2) << '\n';
  return kOk;
}

/// "lo:hi:steps" with steps >= 2.
Axis parse_range(const std::string& text, const char* flag) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string::npos || text.find(':', c2 + 1) != std::string::npos)
    throw ConfigError(std::string(flag) + " expects lo:hi:steps, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string lo_s = text.substr(0, c1), hi_s = text.substr(c1 + 1, c2 - c1 - 1),
                      n_s = text.substr(c2 + 1);
    const double lo = std::stod(lo_s, &used);
    if (used != lo_s.size()) throw std::invalid_argument("lo");
    const double hi = std::stod(hi_s, &used);
    if (used != hi_s.size()) throw std::invalid_argument("hi");
    const int steps = std::stoi(n_s, &used);
    if (used != n_s.size()) throw std::invalid_argument("steps");
    if (steps < 2) throw ConfigError(std::string(flag) + ": a range needs at least 2 steps");
    return Axis::range(lo, hi, steps);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) throw;
    throw ConfigError(std::string(flag) + " expects lo:hi:steps, got '" + text + "'");
  }
}

struct ScanFlags {
  std::string family;
  std::optional<double> sa, sb, gain;
  std::string sa_range, sb_range, gain_range;
  bool symmetric = false;
  double phase_r = 0.0, zeta_a = 0.0, zeta_b = 0.0, phi = 0.0;
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;
};

Axis pick_axis(const std::optional<double>& fixed, const std::string& range, const char* name) {
  if (fixed && !range.empty())
    throw ConfigError(std::string("give either --") + name + " or --" + name + "-range, not both");
  if (!range.empty()) return parse_range(range, name);
  if (fixed) return Axis::fixed(*fixed);
  throw ConfigError(std::string("missing --") + name + " or --" + name + "-range");
}

int run_scan_cmd(const ScanFlags& f) {
  ScanSpec spec;
  spec.family = parse_family(f.family);
  spec.s_a = pick_axis(f.sa, f.sa_range, "sa");
  spec.symmetric = f.symmetric;
  if (!f.symmetric) spec.s_b = pick_axis(f.sb, f.sb_range, "sb");
  spec.gain = pick_axis(f.gain, f.gain_range, "gain");
  spec.coherent_phase_r = f.phase_r;
  spec.zeta_a = f.zeta_a;
  spec.zeta_b = f.zeta_b;
  spec.phi = f.phi;
  spec.validate();

  const ScanResult result = run_scan(spec, f.threads);
  emit(result, f.format == "json" ? OutputFormat::Json : OutputFormat::Csv, f.out);

  std::map<RegionLabel, std::size_t> counts;
  for (const ScanRow& r : result.rows) ++counts[r.label];
  std::cout << "points=" << result.rows.size();
  for (RegionLabel l : {RegionLabel::Classical, RegionLabel::EntOnly, RegionLabel::Ssn, RegionLabel::Lee})
    std::cout << ' ' << to_string(l) << '=' << counts[l];
  std::cout << " hierarchy_violations=" << result.hierarchy_violations << '\n';
  return kOk;
}

struct VerifyFlags {
  int dim = oracle::kDefaultDim;
  double tail_bound = 1e-8;
  double tolerance = 1e-6;
  bool no_calibrate = false;
  std::string format = "text";
};

int run_verify(const PointFlags& p, const VerifyFlags& v) {
  const SeededPdcConfig cfg = to_config(p);
  oracle::OracleConfig oc;
  oc.dim = v.dim;
  oc.tail_bound = v.tail_bound;
  oc.validate();
  oracle::VerifyOptions opts;
  opts.tolerance = v.tolerance;
  opts.calibrate = !v.no_calibrate;
  const oracle::VerifyReport rep = oracle::verify_point(cfg, oc, opts);

  auto status = [](const oracle::ComparisonRow& r) {
    if (r.pass) return "pass";
    return r.ledger_only ? "ledger" : "FAIL";
  };
  if (v.format == "json") {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"quantity", r.quantity},
                      {"closed_form", r.closed_form},
                      {"oracle", r.oracle},
                      {"abs_diff", r.abs_diff},
                      {"tolerance", r.tolerance},
                      {"status", status(r)}});
    json out = {{"dim", oc.dim},
                {"tail_mass", rep.tail_mass},
                {"unitarity_residual", rep.unitarity_residual},
                {"phase_offset", rep.calibration ? json(rep.calibration->offset) : json(nullptr)},
                {"ok", rep.ok()},
                {"rows", rows}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::printf("dim=%d tail_mass=%.3e unitarity_residual=%.3e", oc.dim, rep.tail_mass,
                rep.unitarity_residual);
    if (rep.calibration) std::printf(" phase_offset=%.3e", rep.calibration->offset);
    std::printf("\n%-24s %22s %22s %12s %10s  %s\n", "quantity", "closed_form", "oracle",
                "abs_diff", "tolerance", "status");
    for (const auto& r : rep.rows)
      std::printf("%-24s %22.15g %22.15g %12.3e %10.1e  %s\n", r.quantity.c_str(), r.closed_form,
                  r.oracle, r.abs_diff, r.tolerance, status(r));
  }
  return rep.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonclassicality quantifiers for seeded parametric down-conversion"};
  app.require_subcommand(1);

  PointFlags qp, tp, vp;
  auto* quantify = app.add_subcommand("quantify", "P_SSN, P_Lee, P_Ent and entanglement at one point");
  add_seed_flags(quantify, qp, true);

  auto* threshold = app.add_subcommand("threshold", "Gain thresholds of the three criteria");
  add_seed_flags(threshold, tp, false);

  ScanFlags sf;
  auto* scan = app.add_subcommand("scan", "Classify a grid of seed intensities and gains");
  scan->add_option("--family", sf.family, "Seed family")->required()->check(CLI::IsMember(kFamilies));
  scan->add_option("--sa", sf.sa, "Fixed seed intensity of mode A");
  scan->add_option("--sb", sf.sb, "Fixed seed intensity of mode B");
  scan->add_option("--gain", sf.gain, "Fixed PDC gain N");
  scan->add_option("--sa-range", sf.sa_range, "lo:hi:steps");
  scan->add_option("--sb-range", sf.sb_range, "lo:hi:steps");
  scan->add_option("--gain-range", sf.gain_range, "lo:hi:steps");
  scan->add_flag("--symmetric", sf.symmetric, "Tie s_b to s_a");
  scan->add_option("--phase-r", sf.phase_r, "Coherent phase gamma_A + gamma_B - phi (rad)");
  scan->add_option("--zeta-a", sf.zeta_a, "Squeezing phase of seed A (rad)");
  scan->add_option("--zeta-b", sf.zeta_b, "Squeezing phase of seed B (rad)");
  scan->add_option("--phi", sf.phi, "PDC phase for squeezed seeds (rad)");
  scan->add_option("--out", sf.out, "Destination file")->required();
  scan->add_option("--format", sf.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan->add_option("--threads", sf.threads, "Worker threads")->check(CLI::Range(1u, 1024u));

  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "Compare closed forms with the truncated Fock oracle");
  add_seed_flags(verify, vp, true);
  verify->add_option("--dim", vf.dim, "Fock levels per mode")->check(CLI::Range(4, 4096));
  verify->add_option("--tail-bound", vf.tail_bound, "Allowed top-two-level population");
  verify->add_option("--tolerance", vf.tolerance, "Absolute tolerance per comparison");
  verify->add_flag("--no-calibrate", vf.no_calibrate, "Skip the coherent phase calibration");
  verify->add_option("--format", vf.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*quantify) return run_quantify(qp);
    if (*threshold) return run_threshold(tp);
    if (*scan) return run_scan_cmd(sf);
    if (*verify) return run_verify(vp, vf);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const UndefinedQuantifier& e) {
    std::cerr << "undefined: " << e.what() << '\n';
    return kUndefined;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kIo;
  } catch (const TruncationInadequate& e) {
    std::cerr << "truncation inadequate: " << e.what() << " (tail_mass=" << e.tail_mass() << ")\n";
    return kTruncation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

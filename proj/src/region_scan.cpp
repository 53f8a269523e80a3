#include "seedpdc/region_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <system_error>
#include <thread>
#include <unistd.h>

#include <json.hpp>

#include "seedpdc/errors.hpp"
#include "seedpdc/gaussian_covariance.hpp"

namespace seedpdc {
namespace {

using nlohmann::json;

RegionLabel parse_label(std::string_view s) {
  if (s == "CLASSICAL") return RegionLabel::Classical;
  if (s == "ENT_ONLY") return RegionLabel::EntOnly;
  if (s == "SSN") return RegionLabel::Ssn;
  if (s == "LEE") return RegionLabel::Lee;
  throw ConfigError("unknown region label '" + std::string(s) + "'");
}

ScanRow evaluate(const ScanSpec& spec, double sa, double sb, double n) {
  ScanRow row;
  row.family = spec.family;
  row.s_a = sa;
  row.s_b = sb;
  row.n_gain = n;
  if (spec.family == SeedFamily::Coherent) row.phase_r = spec.coherent_phase_r;
  const SeededPdcConfig cfg = SeededPdcConfig::from_family(
      spec.family, sa, sb, n, spec.coherent_phase_r, spec.zeta_a, spec.zeta_b, spec.phi);
  try {
    const QuantifierReport q = classify(cfg);
    row.p_ssn = q.p_ssn;
    row.p_lee = q.p_lee;
    row.p_ent = q.p_ent;
    row.d_minus = q.d_minus;
    row.flags = q.flags;
  } catch (const UndefinedQuantifier&) {
    // Both beams empty: no light, nothing nonclassical to report.
    row.d_minus = is_entangled_gaussian(cfg).d_minus;
  }
  row.label = label_for(row.flags);
  return row;
}

std::string cell(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

json opt_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

double Axis::at(int i) const {
  if (steps == 1) return lo;
  if (i == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void Axis::validate(std::string_view name) const {
  const std::string n(name);
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ConfigError(n + " axis bounds must be finite");
  if (lo < 0.0 || hi < 0.0) throw ConfigError(n + " axis values must be >= 0");
  if (steps == 1) {
    if (lo != hi) throw ConfigError(n + " axis: a range needs at least 2 steps");
    return;
  }
  if (steps < 2) throw ConfigError(n + " axis: steps must be >= 2");
  if (hi < lo) throw ConfigError(n + " axis: upper bound below lower bound");
}

void ScanSpec::validate() const {
  s_a.validate("s_a");
  if (!symmetric) s_b.validate("s_b");
  gain.validate("gain");
  if (!std::isfinite(coherent_phase_r) || !std::isfinite(zeta_a) || !std::isfinite(zeta_b) ||
      !std::isfinite(phi))
    throw ConfigError("scan phases must be finite");
  if (family == SeedFamily::Vacuum && (s_a.hi > 0.0 || (!symmetric && s_b.hi > 0.0)))
    throw ConfigError("vacuum scans must have zero seed intensities");
}

std::size_t ScanSpec::point_count() const {
  const std::size_t nb = symmetric ? 1 : static_cast<std::size_t>(s_b.steps);
  return static_cast<std::size_t>(s_a.steps) * nb * static_cast<std::size_t>(gain.steps);
}

std::string_view to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Classical:
      return "CLASSICAL";
    case RegionLabel::EntOnly:
      return "ENT_ONLY";
    case RegionLabel::Ssn:
      return "SSN";
    case RegionLabel::Lee:
      return "LEE";
  }
  return "CLASSICAL";
}

RegionLabel label_for(const QuantifierFlags& flags) {
  if (flags.is_lee_nonclassical) return RegionLabel::Lee;
  if (flags.is_ssn) return RegionLabel::Ssn;
  if (flags.is_entangled) return RegionLabel::EntOnly;
  return RegionLabel::Classical;
}

ScanResult run_scan(const ScanSpec& spec, unsigned threads) {
  spec.validate();
  const std::size_t total = spec.point_count();
  const std::size_t nb = spec.symmetric ? 1 : static_cast<std::size_t>(spec.s_b.steps);
  ScanResult result;
  result.rows.resize(total);

  auto point = [&](std::size_t k) {
    const int g = static_cast<int>(k % spec.gain.steps);
    const int ib = static_cast<int>((k / spec.gain.steps) % nb);
    const int ia = static_cast<int>(k / (spec.gain.steps * nb));
    const double sa = spec.s_a.at(ia);
    const double sb = spec.symmetric ? sa : spec.s_b.at(ib);
    result.rows[k] = evaluate(spec, sa, sb, spec.gain.at(g));
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (threads == 1) {
    for (std::size_t k = 0; k < total; ++k) point(k);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < total && !failed; k = next++) {
          try {
            point(k);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }
  result.hierarchy_violations = hierarchy_audit(result).violations.size();
  return result;
}

HierarchyAudit hierarchy_audit(const ScanResult& result) {
  HierarchyAudit audit;
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    const ScanRow& r = result.rows[i];
    if (r.flags.is_lee_nonclassical && !r.flags.is_ssn)
      audit.violations.push_back({i, "LEE=>SSN"});
    if (r.family == SeedFamily::Thermal && r.flags.is_ssn && !r.flags.is_entangled)
      audit.violations.push_back({i, "SSN=>ENT"});
  }
  return audit;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const ScanResult& result) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const ScanRow& r : result.rows) {
    out += to_string(r.family);
    out += ',' + format_number(r.s_a);
    out += ',' + format_number(r.s_b);
    out += ',' + format_number(r.n_gain);
    out += ',' + cell(r.phase_r);
    out += ',' + cell(r.p_ssn);
    out += ',' + cell(r.p_lee);
    out += ',' + cell(r.p_ent);
    out += ',' + format_number(r.d_minus);
    out += ',';
    out += to_string(r.label);
    out += '\n';
  }
  return out;
}

std::string to_json(const ScanResult& result) {
  json rows = json::array();
  for (const ScanRow& r : result.rows) {
    rows.push_back({
        {"family", std::string(to_string(r.family))},
        {"s_a", r.s_a},
        {"s_b", r.s_b},
        {"n_pdc", r.n_gain},
        {"phase_r", opt_json(r.phase_r)},
        {"p_ssn", opt_json(r.p_ssn)},
        {"p_lee", opt_json(r.p_lee)},
        {"p_ent", opt_json(r.p_ent)},
        {"d_minus", r.d_minus},
        {"label", std::string(to_string(r.label))},
        {"flags",
         {{"is_ssn", r.flags.is_ssn},
          {"is_lee_nonclassical", r.flags.is_lee_nonclassical},
          {"is_entangled", r.flags.is_entangled}}},
    });
  }
  json doc = {{"rows", rows}, {"hierarchy_violations", result.hierarchy_violations}};
  return doc.dump(2) + "\n";
}

ScanResult parse_json(std::string_view text) {
  ScanResult result;
  try {
    const json doc = json::parse(text);
    result.hierarchy_violations = doc.at("hierarchy_violations").get<std::size_t>();
    for (const json& j : doc.at("rows")) {
      ScanRow r;
      r.family = parse_family(j.at("family").get<std::string>());
      r.s_a = j.at("s_a").get<double>();
      r.s_b = j.at("s_b").get<double>();
      r.n_gain = j.at("n_pdc").get<double>();
      r.phase_r = opt_from(j.at("phase_r"));
      r.p_ssn = opt_from(j.at("p_ssn"));
      r.p_lee = opt_from(j.at("p_lee"));
      r.p_ent = opt_from(j.at("p_ent"));
      r.d_minus = j.at("d_minus").get<double>();
      r.label = parse_label(j.at("label").get<std::string>());
      const json& f = j.at("flags");
      r.flags.is_ssn = f.at("is_ssn").get<bool>();
      r.flags.is_lee_nonclassical = f.at("is_lee_nonclassical").get<bool>();
      r.flags.is_entangled = f.at("is_entangled").get<bool>();
      result.rows.push_back(r);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed scan JSON: ") + e.what());
  }
  return result;
}

void emit(const ScanResult& result, OutputFormat format, const std::filesystem::path& destination) {
  namespace fs = std::filesystem;
  const std::string body = format == OutputFormat::Csv ? to_csv(result) : to_json(result);
  fs::path tmp = destination;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, destination, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move output into '" + destination.string() + "': " + ec.message());
  }
}

}  // namespace seedpdc

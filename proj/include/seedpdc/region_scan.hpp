#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seedpdc/quantifiers.hpp"
#include "seedpdc/seed_model.hpp"

namespace seedpdc {

/// Inclusive, uniformly spaced axis. A fixed axis has steps == 1 and lo == hi;
/// any other axis needs steps >= 2.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  static Axis fixed(double v) { return {v, v, 1}; }
  static Axis range(double lo, double hi, int steps) { return {lo, hi, steps}; }
  double at(int i) const;
  void validate(std::string_view name) const;
};

struct ScanSpec {
  SeedFamily family = SeedFamily::Thermal;
  Axis s_a = Axis::fixed(0.0);
  Axis s_b = Axis::fixed(0.0);
  Axis gain = Axis::fixed(0.0);
  /// Use s_a for both seeds (the s_b axis is ignored).
  bool symmetric = false;
  double coherent_phase_r = 0.0;
  double zeta_a = 0.0, zeta_b = 0.0, phi = 0.0;  ///< squeezed scans

  void validate() const;
  std::size_t point_count() const;
};

enum class RegionLabel { Classical, EntOnly, Ssn, Lee };
std::string_view to_string(RegionLabel label);

struct ScanRow {
  SeedFamily family = SeedFamily::Thermal;
  double s_a = 0.0, s_b = 0.0, n_gain = 0.0;
  std::optional<double> phase_r;  ///< coherent rows only
  std::optional<double> p_ssn, p_lee, p_ent;
  double d_minus = 0.5;
  QuantifierFlags flags;
  RegionLabel label = RegionLabel::Classical;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  std::size_t hierarchy_violations = 0;
};

/// Row-major over (s_a, s_b, gain), gain fastest. `threads` > 1 evaluates
/// points concurrently; the output is identical for any thread count.
ScanResult run_scan(const ScanSpec& spec, unsigned threads = 1);

RegionLabel label_for(const QuantifierFlags& flags);

struct HierarchyViolation {
  std::size_t row = 0;
  std::string rule;
};

struct HierarchyAudit {
  std::vector<HierarchyViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks LEE => SSN for all rows and SSN => entangled for thermal rows,
/// using the stored flags.
HierarchyAudit hierarchy_audit(const ScanResult& result);

enum class OutputFormat { Csv, Json };

inline constexpr std::string_view kCsvHeader =
    "family,s_a,s_b,n_pdc,phase_r,p_ssn,p_lee,p_ent,d_minus,label";

std::string to_csv(const ScanResult& result);
std::string to_json(const ScanResult& result);
ScanResult parse_json(std::string_view text);

/// Writes via a temporary file in the same directory followed by rename.
/// Throws IoError when the destination cannot be written.
void emit(const ScanResult& result, OutputFormat format, const std::filesystem::path& destination);

/// %.12g
std::string format_number(double v);

}  // namespace seedpdc

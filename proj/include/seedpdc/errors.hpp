#pragma once

#include <stdexcept>
#include <string>

namespace seedpdc {

/// Invalid seed/PDC parameters, mixed seed families or malformed scan specs.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A quantifier was requested for a state where it has no value
/// (both beams empty, so the shot-noise denominator vanishes).
class UndefinedQuantifier : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The quantity exists only for some seed families (P_Ent is thermal-only).
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Population in the top Fock levels exceeds the adequacy bound.
class TruncationInadequate : public std::runtime_error {
 public:
  TruncationInadequate(const std::string& what, double tail_mass)
      : std::runtime_error(what), tail_mass_(tail_mass) {}
  double tail_mass() const noexcept { return tail_mass_; }

 private:
  double tail_mass_;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace seedpdc

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lefschetz {

// Local transversality gain t(beta):
//   log:  beta / (log 1/beta)^d
//   poly: beta^q
struct TransversalityKind {
  enum class Shape { log, poly } shape = Shape::log;
  double parameter = 1.0;  // d or q

  static TransversalityKind log_kind(double d) { return {Shape::log, d}; }
  static TransversalityKind poly_kind(double q) { return {Shape::poly, q}; }
  std::string to_string() const;
};

struct ScheduleReport {
  // L_N = log(1/beta_N), N = 0..steps, 12 significant digits
  std::vector<std::string> log_inv_beta;
  // N with exp(-N^{1/n}) beta_N >= beta_{N+1} / 2, checked for 1 <= N < steps
  std::vector<std::size_t> violations;
  std::optional<std::size_t> first_violation;
  // start of the failing run that reaches the horizon, if any
  std::optional<std::size_t> first_failure;
  bool survives = true;
  std::vector<std::string> notes;
};

// beta_{N+1} = t(beta_N) / 2, computed on L = log(1/beta) with 200-bit floats.
ScheduleReport donaldson_schedule(const TransversalityKind& kind, int n, std::size_t steps, double beta0);

}  // namespace lefschetz

#include "lefschetz/schedule.hpp"

#include "lefschetz/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <sstream>

namespace lefschetz {

namespace {
using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200, boost::multiprecision::digit_base_2>>;

std::string short_str(const Float& x) { return x.str(12, std::ios_base::fmtflags(0)); }
}  // namespace

std::string TransversalityKind::to_string() const {
  std::ostringstream os;
  os << (shape == Shape::log ? "log{d=" : "poly{q=") << parameter << "}";
  return os.str();
}

ScheduleReport donaldson_schedule(const TransversalityKind& kind, int n, std::size_t steps, double beta0) {
  if (!(beta0 > 0.0) || !(beta0 < std::exp(-1.0))) throw InputError("beta0 must lie in (0, 1/e)");
  if (steps < 1) throw InputError("steps must be at least 1");
  if (n < 1) throw InputError("dimension n must be positive");
  if (kind.shape == TransversalityKind::Shape::poly && !(kind.parameter > 0))
    throw InputError("poly exponent q must be positive");
  if (kind.shape == TransversalityKind::Shape::log && kind.parameter < 0)
    throw InputError("log exponent d must be non-negative");

  ScheduleReport r;
  const Float log2 = boost::multiprecision::log(Float(2));
  const Float p = Float(kind.parameter);
  std::vector<Float> L;
  L.reserve(steps + 1);
  L.push_back(-boost::multiprecision::log(Float(beta0)));
  for (std::size_t k = 0; k < steps; ++k) {
    const Float& x = L.back();
    if (kind.shape == TransversalityKind::Shape::log)
      L.push_back(x + p * boost::multiprecision::log(x) + log2);
    else
      L.push_back(p * x + log2);
  }
  for (const auto& x : L) r.log_inv_beta.push_back(short_str(x));

  // exp(-N^{1/n}) beta_N < beta_{N+1}/2  <=>  L_{N+1} - L_N + log 2 < N^{1/n}
  bool failing_tail = false;
  for (std::size_t N = 1; N < steps; ++N) {
    const Float lhs = L[N + 1] - L[N] + log2;
    const Float rhs = boost::multiprecision::pow(Float(N), Float(1) / n);
    if (lhs >= rhs) {
      r.violations.push_back(N);
      if (!r.first_violation) r.first_violation = N;
      if (!failing_tail) r.first_failure = N;
      failing_tail = true;
    } else {
      failing_tail = false;
      r.first_failure.reset();
    }
  }
  r.survives = !failing_tail;
  r.notes.push_back("constant prefactors set to 1");
  if (r.survives && r.first_violation)
    r.notes.push_back("early violations up to N=" + std::to_string(r.violations.back()) +
                      " absorbed by the constants; inequality holds from then to the horizon");
  return r;
}

}  // namespace lefschetz

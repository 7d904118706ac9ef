#include "titeica/jets.hpp"

#include <cmath>
#include <sstream>

namespace titeica {

namespace detail {

void check_order(int order) {
  if (order < 0 || order > kMaxJetOrder) {
    std::ostringstream os;
    os << "jet order " << order << " outside [0, " << kMaxJetOrder << "]";
    throw OrderError(os.str());
  }
}

namespace {

[[noreturn]] void domain_violation(const char* fn, double x) {
  std::ostringstream os;
  os.precision(17);
  os << fn << ": argument " << x << " outside the domain";
  throw DomainError(os.str());
}

}  // namespace

UnivariateDerivs exp_derivs(double x) {
  const double e = std::exp(x);
  return {e, e, e, e};
}

UnivariateDerivs log_derivs(double x) {
  if (!(x > 0.0)) domain_violation("log", x);
  const double r = 1.0 / x;
  return {std::log(x), r, -r * r, 2.0 * r * r * r};
}

UnivariateDerivs sinh_derivs(double x) {
  const double s = std::sinh(x), c = std::cosh(x);
  return {s, c, s, c};
}

UnivariateDerivs cosh_derivs(double x) {
  const double s = std::sinh(x), c = std::cosh(x);
  return {c, s, c, s};
}

UnivariateDerivs tanh_derivs(double x) {
  const double t = std::tanh(x);
  const double d1 = 1.0 - t * t;
  return {t, d1, -2.0 * t * d1, (6.0 * t * t - 2.0) * d1};
}

UnivariateDerivs sin_derivs(double x) {
  const double s = std::sin(x), c = std::cos(x);
  return {s, c, -s, -c};
}

UnivariateDerivs cos_derivs(double x) {
  const double s = std::sin(x), c = std::cos(x);
  return {c, -s, -c, s};
}

UnivariateDerivs tan_derivs(double x) {
  if (std::abs(std::cos(x)) < 1e-14) domain_violation("tan", x);
  const double t = std::tan(x);
  const double d1 = 1.0 + t * t;
  return {t, d1, 2.0 * t * d1, (2.0 + 6.0 * t * t) * d1};
}

UnivariateDerivs sqrt_derivs(double x) {
  if (!(x > 0.0)) domain_violation("sqrt", x);
  const double s = std::sqrt(x);
  return {s, 0.5 / s, -0.25 / (s * x), 0.375 / (s * x * x)};
}

UnivariateDerivs powi_derivs(double x, int n) {
  if (n < 0 && x == 0.0) domain_violation("powi", x);
  UnivariateDerivs d{};
  double factor = 1.0;
  for (int k = 0; k <= kMaxJetOrder; ++k) {
    if (factor == 0.0) {
      d[k] = 0.0;
    } else {
      d[k] = factor * std::pow(x, n - k);
    }
    factor *= (n - k);
  }
  return d;
}

}  // namespace detail

Jet2 seed_u(double u0, double v0, int order) {
  if (order < 1 || order > kMaxJetOrder)
    throw OrderError("seed_u: order must be 1, 2 or 3");
  return Jet2::variable(0, {u0, v0}, order);
}

Jet2 seed_v(double u0, double v0, int order) {
  if (order < 1 || order > kMaxJetOrder)
    throw OrderError("seed_v: order must be 1, 2 or 3");
  return Jet2::variable(1, {u0, v0}, order);
}

Jet1 seed_t(double t0, int order) {
  if (order < 1 || order > kMaxJetOrder)
    throw OrderError("seed_t: order must be 1, 2 or 3");
  return Jet1::variable(0, {t0}, order);
}

}  // namespace titeica

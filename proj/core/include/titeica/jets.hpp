#pragma once

// Truncated Taylor jets in one, two or three variables.
//
// A Jet<N> stores every partial derivative d^|a| f / dx^a of a scalar
// function at a base point for multi-indices |a| <= order <= 3. Entries are
// plain derivative values, not Taylor coefficients divided by factorials.
// Arithmetic and elementary functions propagate derivatives exactly through
// the stored order, so any closed-form expression written against Jet<N>
// yields exact partials.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "titeica/error.hpp"

namespace titeica {

inline constexpr int kMaxJetOrder = 3;

namespace detail {

constexpr int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

constexpr double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Multi-indices of total degree <= kMaxJetOrder, ordered by degree, then
/// lexicographically descending in the leading variable:
/// N=2 gives (0,0) (1,0) (0,1) (2,0) (1,1) (0,2) (3,0) (2,1) (1,2) (0,3).
template <int N>
struct IndexTable {
  static constexpr int kSize = binomial(N + kMaxJetOrder, N);

  std::array<std::array<int, N>, kSize> index{};
  std::array<int, kSize> degree{};
  // product[i][j]: slot of index[i] + index[j] (or -1 when the degree
  // exceeds kMaxJetOrder) and the Leibniz weight prod_k C(a_k+b_k, a_k).
  std::array<std::array<int, kSize>, kSize> product_slot{};
  std::array<std::array<double, kSize>, kSize> product_weight{};
  std::array<double, kSize> inv_factorial{};

  constexpr IndexTable() {
    int n = 0;
    for (int deg = 0; deg <= kMaxJetOrder; ++deg) enumerate(deg, 0, {}, n);
    for (int i = 0; i < kSize; ++i) {
      double f = 1.0;
      for (int k = 0; k < N; ++k) f *= factorial(index[i][k]);
      inv_factorial[i] = 1.0 / f;
      for (int j = 0; j < kSize; ++j) {
        std::array<int, N> sum{};
        double w = 1.0;
        for (int k = 0; k < N; ++k) {
          sum[k] = index[i][k] + index[j][k];
          w *= binomial(sum[k], index[i][k]);
        }
        product_slot[i][j] = slot_of(sum);
        product_weight[i][j] = w;
      }
    }
  }

  constexpr int slot_of(const std::array<int, N>& a) const {
    int deg = 0;
    for (int k = 0; k < N; ++k) {
      if (a[k] < 0) return -1;
      deg += a[k];
    }
    if (deg > kMaxJetOrder) return -1;
    for (int i = 0; i < kSize; ++i)
      if (index[i] == a) return i;
    return -1;
  }

 private:
  constexpr void enumerate(int remaining, int var, std::array<int, N> cur,
                           int& n) {
    if (var == N - 1) {
      cur[var] = remaining;
      index[n] = cur;
      int deg = 0;
      for (int k = 0; k < N; ++k) deg += cur[k];
      degree[n] = deg;
      ++n;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      cur[var] = e;
      enumerate(remaining - e, var + 1, cur, n);
    }
  }
};

template <int N>
inline constexpr IndexTable<N> kIndexTable{};

/// f, f', f'', f''' of a univariate elementary function at x.
using UnivariateDerivs = std::array<double, kMaxJetOrder + 1>;

void check_order(int order);

}  // namespace detail

template <int N>
class Jet {
  static_assert(N >= 1 && N <= 3, "jets are provided in 1, 2 or 3 variables");

 public:
  static constexpr int kSize = detail::IndexTable<N>::kSize;
  using Point = std::array<double, N>;
  using MultiIndex = std::array<int, N>;

  Jet() = default;

  static Jet constant(double c, const Point& base, int order) {
    Jet j(base, order);
    j.c_[0] = c;
    return j;
  }

  /// The coordinate function x_axis seeded at `base`.
  static Jet variable(int axis, const Point& base, int order) {
    if (axis < 0 || axis >= N)
      throw InvalidArgument("jet variable axis out of range");
    Jet j(base, order);
    j.c_[0] = base[axis];
    if (order >= 1) {
      MultiIndex e{};
      e[axis] = 1;
      j.c_[slot(e)] = 1.0;
    }
    return j;
  }

  /// Zero jet; entries can then be filled with set().
  static Jet zero(const Point& base, int order) { return Jet(base, order); }

  int order() const { return order_; }
  const Point& base() const { return base_; }
  double value() const { return c_[0]; }

  double operator[](const MultiIndex& a) const {
    const int s = slot(a);
    if (s < 0) throw OrderError("multi-index exceeds the maximum jet order");
    if (degree_of(s) > order_) {
      std::ostringstream os;
      os << "derivative of degree " << degree_of(s) << " requested from a jet of order "
         << order_;
      throw OrderError(os.str());
    }
    return c_[s];
  }

  /// Partial derivative d^(i1+...+iN) f at the base point.
  template <class... I>
    requires(sizeof...(I) == N)
  double d(I... i) const {
    return (*this)[MultiIndex{static_cast<int>(i)...}];
  }

  void set(const MultiIndex& a, double v) {
    const int s = slot(a);
    if (s < 0 || degree_of(s) > order_)
      throw OrderError("multi-index outside the jet's order");
    c_[s] = v;
  }

  /// Storage slot access, indices ordered as in detail::IndexTable.
  double coeff(int s) const { return c_[s]; }
  static const MultiIndex& multi_index(int s) { return detail::kIndexTable<N>.index[s]; }
  static int degree_of(int s) { return detail::kIndexTable<N>.degree[s]; }
  static int slot(const MultiIndex& a) { return detail::kIndexTable<N>.slot_of(a); }

  /// Jet of the partial derivative along `axis`; its order drops by one.
  Jet partial(int axis) const {
    if (order_ < 1) throw OrderError("cannot differentiate an order-0 jet");
    Jet r(base_, order_ - 1);
    for (int s = 0; s < kSize; ++s) {
      if (degree_of(s) > order_ - 1) continue;
      MultiIndex a = multi_index(s);
      ++a[axis];
      r.c_[s] = c_[slot(a)];
    }
    return r;
  }

  Jet truncated(int order) const {
    if (order > order_) throw OrderError("truncation cannot raise the jet order");
    Jet r(base_, order);
    for (int s = 0; s < kSize; ++s)
      if (degree_of(s) <= order) r.c_[s] = c_[s];
    return r;
  }

  bool is_finite() const {
    for (double v : c_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  Jet operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
  }

  Jet& operator+=(const Jet& o) {
    align(o);
    for (int s = 0; s < kSize; ++s) c_[s] += o.c_[s];
    return clip();
  }
  Jet& operator-=(const Jet& o) {
    align(o);
    for (int s = 0; s < kSize; ++s) c_[s] -= o.c_[s];
    return clip();
  }
  Jet& operator*=(const Jet& o) {
    align(o);
    const auto& t = detail::kIndexTable<N>;
    std::array<double, kSize> out{};
    for (int i = 0; i < kSize; ++i) {
      if (c_[i] == 0.0 || degree_of(i) > order_) continue;
      for (int j = 0; j < kSize; ++j) {
        const int k = t.product_slot[i][j];
        if (k < 0 || degree_of(k) > order_) continue;
        out[k] += t.product_weight[i][j] * c_[i] * o.c_[j];
      }
    }
    c_ = out;
    return *this;
  }
  Jet& operator/=(const Jet& o);

  Jet& operator+=(double c) {
    c_[0] += c;
    return *this;
  }
  Jet& operator-=(double c) {
    c_[0] -= c;
    return *this;
  }
  Jet& operator*=(double c) {
    for (double& v : c_) v *= c;
    return *this;
  }
  Jet& operator/=(double c) {
    if (c == 0.0) throw DomainError("jet division by the constant 0");
    for (double& v : c_) v /= c;
    return *this;
  }

  /// Composes a univariate function, given by its derivatives at value(),
  /// with this jet.
  Jet apply(const detail::UnivariateDerivs& f) const {
    Jet delta = *this;
    delta.c_[0] = 0.0;
    Jet result = constant(f[0], base_, order_);
    Jet power = constant(1.0, base_, order_);
    for (int k = 1; k <= order_; ++k) {
      power *= delta;
      Jet term = power;
      term *= f[k] / detail::factorial(k);
      result += term;
    }
    return result;
  }

 private:
  Jet(const Point& base, int order) : base_(base), order_(order) {
    if (order < 0 || order > kMaxJetOrder) detail::check_order(order);
  }

  void align(const Jet& o) {
    if (o.base_ != base_) {
      std::ostringstream os;
      os << "jet base-point mismatch: (";
      for (int k = 0; k < N; ++k) os << (k ? ", " : "") << base_[k];
      os << ") vs (";
      for (int k = 0; k < N; ++k) os << (k ? ", " : "") << o.base_[k];
      os << ")";
      throw InvalidArgument(os.str());
    }
    if (o.order_ < order_) order_ = o.order_;
  }

  Jet& clip() {
    for (int s = 0; s < kSize; ++s)
      if (degree_of(s) > order_) c_[s] = 0.0;
    return *this;
  }

  Point base_{};
  int order_ = 0;
  std::array<double, kSize> c_{};
};

using Jet1 = Jet<1>;
using Jet2 = Jet<2>;
using Jet3 = Jet<3>;

// --- elementary functions --------------------------------------------------

namespace detail {
UnivariateDerivs exp_derivs(double x);
UnivariateDerivs log_derivs(double x);
UnivariateDerivs sinh_derivs(double x);
UnivariateDerivs cosh_derivs(double x);
UnivariateDerivs tanh_derivs(double x);
UnivariateDerivs sin_derivs(double x);
UnivariateDerivs cos_derivs(double x);
UnivariateDerivs tan_derivs(double x);
UnivariateDerivs sqrt_derivs(double x);
UnivariateDerivs powi_derivs(double x, int n);
}  // namespace detail

template <int N>
Jet<N> exp(const Jet<N>& a) { return a.apply(detail::exp_derivs(a.value())); }
template <int N>
Jet<N> log(const Jet<N>& a) { return a.apply(detail::log_derivs(a.value())); }
template <int N>
Jet<N> sinh(const Jet<N>& a) { return a.apply(detail::sinh_derivs(a.value())); }
template <int N>
Jet<N> cosh(const Jet<N>& a) { return a.apply(detail::cosh_derivs(a.value())); }
template <int N>
Jet<N> tanh(const Jet<N>& a) { return a.apply(detail::tanh_derivs(a.value())); }
template <int N>
Jet<N> sin(const Jet<N>& a) { return a.apply(detail::sin_derivs(a.value())); }
template <int N>
Jet<N> cos(const Jet<N>& a) { return a.apply(detail::cos_derivs(a.value())); }
template <int N>
Jet<N> tan(const Jet<N>& a) { return a.apply(detail::tan_derivs(a.value())); }
template <int N>
Jet<N> sqrt(const Jet<N>& a) { return a.apply(detail::sqrt_derivs(a.value())); }
template <int N>
Jet<N> powi(const Jet<N>& a, int n) { return a.apply(detail::powi_derivs(a.value(), n)); }

template <int N>
Jet<N>& Jet<N>::operator/=(const Jet<N>& o) {
  if (o.value() == 0.0) throw DomainError("jet division by a jet with zero value");
  return *this *= powi(o, -1);
}

template <int N>
Jet<N> operator+(Jet<N> a, const Jet<N>& b) { return a += b; }
template <int N>
Jet<N> operator-(Jet<N> a, const Jet<N>& b) { return a -= b; }
template <int N>
Jet<N> operator*(Jet<N> a, const Jet<N>& b) { return a *= b; }
template <int N>
Jet<N> operator/(Jet<N> a, const Jet<N>& b) { return a /= b; }

template <int N>
Jet<N> operator+(Jet<N> a, double c) { return a += c; }
template <int N>
Jet<N> operator+(double c, Jet<N> a) { return a += c; }
template <int N>
Jet<N> operator-(Jet<N> a, double c) { return a -= c; }
template <int N>
Jet<N> operator-(double c, const Jet<N>& a) { return -a + c; }
template <int N>
Jet<N> operator*(Jet<N> a, double c) { return a *= c; }
template <int N>
Jet<N> operator*(double c, Jet<N> a) { return a *= c; }
template <int N>
Jet<N> operator/(Jet<N> a, double c) { return a /= c; }
template <int N>
Jet<N> operator/(double c, const Jet<N>& a) { return powi(a, -1) * c; }

/// Chain rule for multivariate maps: given the jet of f at p and jets of
/// the arguments x_k(·) whose values equal p, returns the jet of f(x(·)).
/// The result's order is the minimum of all input orders.
template <int N, int M>
Jet<M> compose(const Jet<N>& f, const std::array<Jet<M>, N>& args) {
  int order = f.order();
  for (int k = 0; k < N; ++k) {
    const double x = args[k].value();
    const double p = f.base()[k];
    if (std::abs(x - p) > 1e-12 * (1.0 + std::abs(p)))
      throw InvalidArgument("compose: argument value does not match the jet's base point");
    order = std::min(order, args[k].order());
  }
  const auto& base = args[0].base();
  std::array<std::array<Jet<M>, kMaxJetOrder + 1>, N> powers;
  for (int k = 0; k < N; ++k) {
    Jet<M> delta = args[k].truncated(order) - f.base()[k];
    powers[k][0] = Jet<M>::constant(1.0, base, order);
    for (int e = 1; e <= order; ++e) powers[k][e] = powers[k][e - 1] * delta;
  }
  Jet<M> result = Jet<M>::constant(0.0, base, order);
  const auto& table = detail::kIndexTable<N>;
  for (int s = 0; s < Jet<N>::kSize; ++s) {
    if (table.degree[s] > order) continue;
    const double c = f.coeff(s);
    if (c == 0.0) continue;
    Jet<M> term = Jet<M>::constant(c * table.inv_factorial[s], base, order);
    for (int k = 0; k < N; ++k)
      if (table.index[s][k] > 0) term *= powers[k][table.index[s][k]];
    result += term;
  }
  return result;
}

/// Coordinate function (u, v) -> u at (u0, v0).
Jet2 seed_u(double u0, double v0, int order);
/// Coordinate function (u, v) -> v at (u0, v0).
Jet2 seed_v(double u0, double v0, int order);
/// Identity t -> t at t0.
Jet1 seed_t(double t0, int order);

// --- jet-evaluable functions -------------------------------------------------

/// Open box domain; infinite bounds by default.
template <int N>
struct Box {
  std::array<double, N> lo;
  std::array<double, N> hi;

  static Box everywhere() {
    Box b;
    b.lo.fill(-std::numeric_limits<double>::infinity());
    b.hi.fill(std::numeric_limits<double>::infinity());
    return b;
  }
  bool contains(const std::array<double, N>& p) const {
    for (int k = 0; k < N; ++k)
      if (!(p[k] > lo[k] && p[k] < hi[k])) return false;
    return true;
  }
};

/// A smooth function of N variables that can produce its jet of any order
/// <= kMaxJetOrder at any point of its domain. Closed forms are written as
/// expressions over Jet<N>; derived quantities (quotients of partials,
/// brackets, compositions) are written as evaluators that request their
/// inputs at a higher order.
template <int N>
class JetFn {
 public:
  using Point = std::array<double, N>;
  using Evaluator = std::function<Jet<N>(const Point&, int)>;

  JetFn() = default;
  explicit JetFn(Evaluator eval, Box<N> domain = Box<N>::everywhere())
      : eval_(std::move(eval)), domain_(domain) {}

  /// Wraps an expression `expr(x1, ..., xN)` over jets.
  template <class Expr>
  static JetFn from_expr(Expr expr, Box<N> domain = Box<N>::everywhere()) {
    return JetFn(
        [expr](const Point& p, int order) {
          return seeded(expr, p, order, std::make_index_sequence<N>{});
        },
        domain);
  }

  static JetFn constant(double c) {
    return JetFn([c](const Point& p, int order) { return Jet<N>::constant(c, p, order); });
  }

  explicit operator bool() const { return static_cast<bool>(eval_); }
  const Box<N>& domain() const { return domain_; }

  Jet<N> eval(const Point& p, int order) const {
    detail::check_order(order);
    if (!domain_.contains(p)) {
      std::ostringstream os;
      os << "point (";
      for (int k = 0; k < N; ++k) os << (k ? ", " : "") << p[k];
      os << ") is outside the function's domain";
      throw DomainError(os.str());
    }
    Jet<N> j = eval_(p, order);
    if (!j.is_finite()) {
      std::ostringstream os;
      os << "non-finite jet at (";
      for (int k = 0; k < N; ++k) os << (k ? ", " : "") << p[k];
      os << ")";
      throw DomainError(os.str());
    }
    return j;
  }

  double value(const Point& p) const { return eval(p, 0).value(); }

  /// Evaluates this function on jets of its arguments (chain rule).
  template <int M>
  Jet<M> at(const std::array<Jet<M>, N>& args) const {
    Point p;
    int order = kMaxJetOrder;
    for (int k = 0; k < N; ++k) {
      p[k] = args[k].value();
      order = std::min(order, args[k].order());
    }
    return compose<N, M>(eval(p, order), args);
  }

  // Univariate conveniences.
  Jet<N> eval(double t, int order) const
    requires(N == 1)
  {
    return eval(Point{t}, order);
  }
  double value(double t) const
    requires(N == 1)
  {
    return value(Point{t});
  }
  template <int M>
  Jet<M> at(const Jet<M>& arg) const
    requires(N == 1)
  {
    return at(std::array<Jet<M>, 1>{arg});
  }

 private:
  template <class Expr, std::size_t... I>
  static Jet<N> seeded(const Expr& expr, const Point& p, int order,
                       std::index_sequence<I...>) {
    return expr(Jet<N>::variable(static_cast<int>(I), p, order)...);
  }

  Evaluator eval_;
  Box<N> domain_ = Box<N>::everywhere();
};

using Curve = JetFn<1>;
using Bivariate = JetFn<2>;
using Trivariate = JetFn<3>;

}  // namespace titeica

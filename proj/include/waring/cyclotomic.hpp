#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "waring/error.hpp"
#include "waring/upoly.hpp"

namespace waring {

using Rational = mpq_class;
using RatPoly = UPoly<Rational>;

/// The cyclotomic field Q(zeta_N), represented as Q[t] / Phi_N(t).
class CyclotomicField {
 public:
  explicit CyclotomicField(std::uint64_t conductor, RatPoly modulus)
      : conductor_(conductor), modulus_(std::move(modulus)) {}

  std::uint64_t conductor() const { return conductor_; }
  std::size_t degree() const { return static_cast<std::size_t>(modulus_.degree()); }
  const RatPoly& modulus() const { return modulus_; }

 private:
  std::uint64_t conductor_;
  RatPoly modulus_;
};

using FieldContext = std::shared_ptr<const CyclotomicField>;

namespace detail {

inline RatPoly cyclotomic_polynomial_uncached(std::uint64_t n,
                                               const std::map<std::uint64_t, RatPoly>& known) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  RatPoly acc = RatPoly::monomial(Rational(1), n) - RatPoly(Rational(1));
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    acc = divmod(acc, known.at(d)).first;
  }
  return acc;
}

struct ContextCache {
  std::mutex mutex;
  std::map<std::uint64_t, RatPoly> polys;
  std::map<std::uint64_t, FieldContext> contexts;
};

inline ContextCache& context_cache() {
  static ContextCache cache;
  return cache;
}

inline const RatPoly& cyclotomic_locked(ContextCache& cache, std::uint64_t n) {
  auto it = cache.polys.find(n);
  if (it != cache.polys.end()) return it->second;
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) cyclotomic_locked(cache, d);
  RatPoly p = cyclotomic_polynomial_uncached(n, cache.polys);
  return cache.polys.emplace(n, std::move(p)).first->second;
}

}  // namespace detail

inline RatPoly cyclotomic_polynomial(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::Usage, "conductor must be positive");
  auto& cache = detail::context_cache();
  std::lock_guard lock(cache.mutex);
  return detail::cyclotomic_locked(cache, n);
}

/// Shared, cached context for Q(zeta_N). N = 1 is the rationals.
inline FieldContext make_context(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::Usage, "conductor must be positive");
  auto& cache = detail::context_cache();
  std::lock_guard lock(cache.mutex);
  auto it = cache.contexts.find(n);
  if (it != cache.contexts.end()) return it->second;
  auto ctx = std::make_shared<const CyclotomicField>(n, detail::cyclotomic_locked(cache, n));
  cache.contexts.emplace(n, ctx);
  return ctx;
}

inline FieldContext rational_context() {
  static const FieldContext q = make_context(1);
  return q;
}

/// Exact element of a cyclotomic field: coordinates in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1). Elements whose value is rational combine
/// freely with any field; otherwise both operands must share a conductor.
class Scalar {
 public:
  Scalar() : Scalar(Rational(0)) {}
  Scalar(int v) : Scalar(Rational(v)) {}
  Scalar(long v) : Scalar(Rational(v)) {}
  Scalar(Rational v) : ctx_(rational_context()), c_{std::move(v)} {}

  Scalar(FieldContext ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    c_.resize(ctx_->degree(), Rational(0));
  }

  /// zeta_N^k, reduced modulo Phi_N.
  static Scalar zeta_power(const FieldContext& ctx, std::int64_t k) {
    const std::int64_t n = static_cast<std::int64_t>(ctx->conductor());
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> big(static_cast<std::size_t>(k) + 1, Rational(0));
    big[static_cast<std::size_t>(k)] = 1;
    return from_poly(ctx, RatPoly(std::move(big)));
  }

  static Scalar zeta(const FieldContext& ctx) { return zeta_power(ctx, 1); }

  static Scalar from_poly(const FieldContext& ctx, const RatPoly& p) {
    RatPoly r = p.degree() >= static_cast<int>(ctx->degree()) ? divmod(p, ctx->modulus()).second : p;
    return Scalar(ctx, r.coeffs());
  }

  const FieldContext& context() const { return ctx_; }
  std::uint64_t conductor() const { return ctx_->conductor(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }

  Rational rational_value() const {
    if (!is_rational()) fail(ErrorKind::ContextMismatch, "scalar is not rational");
    return c_.empty() ? Rational(0) : c_[0];
  }

  RatPoly as_poly() const { return RatPoly(c_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    FieldContext ctx = common_context(a, b);
    Scalar x = a.in(ctx), y = b.in(ctx);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend Scalar operator-(const Scalar& a) {
    Scalar x = a;
    for (auto& v : x.c_) v = -v;
    return x;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational()) return b.scaled(a.rational_value());
    if (b.is_rational()) return a.scaled(b.rational_value());
    FieldContext ctx = common_context(a, b);
    return from_poly(ctx, a.as_poly() * b.as_poly());
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero");
    if (is_rational()) return Scalar(Rational(1) / c_[0]);
    auto [g, s] = half_gcdex(as_poly(), ctx_->modulus());
    (void)g;
    return from_poly(ctx_, s);
  }

  Scalar pow(std::int64_t k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar result(1), base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.conductor() == b.conductor()) return a.c_ == b.c_;
    if (a.is_rational() && b.is_rational()) return a.rational_value() == b.rational_value();
    FieldContext ctx = common_context(a, b);
    return a.in(ctx).c_ == b.in(ctx).c_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order used only for deterministic sorting.
  friend int compare(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) {
      int s = cmp(a.rational_value(), b.rational_value());
      return s < 0 ? -1 : (s > 0 ? 1 : 0);
    }
    if (a.conductor() != b.conductor()) return a.conductor() < b.conductor() ? -1 : 1;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      int s = cmp(a.c_[i], b.c_[i]);
      if (s != 0) return s < 0 ? -1 : 1;
    }
    return 0;
  }

  /// Re-expresses this value in ctx; requires conductor() | ctx->conductor()
  /// unless the value is rational.
  Scalar in(const FieldContext& ctx) const {
    if (ctx->conductor() == conductor()) return *this;
    if (is_rational()) {
      std::vector<Rational> c(ctx->degree(), Rational(0));
      c[0] = rational_value();
      return Scalar(ctx, std::move(c));
    }
    if (ctx->conductor() % conductor() != 0)
      fail(ErrorKind::ContextMismatch, "cannot embed Q(zeta_" + std::to_string(conductor()) + ") into Q(zeta_" +
                                           std::to_string(ctx->conductor()) + ")");
    const std::uint64_t step = ctx->conductor() / conductor();
    std::vector<Rational> big(step * (c_.size() - 1) + 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) big[i * step] = c_[i];
    return from_poly(ctx, RatPoly(std::move(big)));
  }

 private:
  Scalar scaled(const Rational& r) const {
    Scalar x = *this;
    for (auto& v : x.c_) v *= r;
    return x;
  }

  static FieldContext common_context(const Scalar& a, const Scalar& b) {
    if (a.conductor() == b.conductor()) return a.ctx_;
    if (a.is_rational()) return b.ctx_;
    if (b.is_rational()) return a.ctx_;
    fail(ErrorKind::ContextMismatch, "operands live in Q(zeta_" + std::to_string(a.conductor()) + ") and Q(zeta_" +
                                         std::to_string(b.conductor()) + ")");
  }

  FieldContext ctx_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Scalar& x) { return x.is_zero(); }

inline Scalar embed(const Scalar& x, const FieldContext& ctx) { return x.in(ctx); }

inline std::uint64_t lcm_conductor(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

inline std::string rational_to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Canonical literal, e.g. "3/2", "zeta(4)", "1-2*zeta(3)^2". Never contains whitespace.
inline std::string to_string(const Scalar& x) {
  if (x.is_rational()) return rational_to_string(x.rational_value());
  std::ostringstream os;
  bool first = true;
  const std::string z = "zeta(" + std::to_string(x.conductor()) + ")";
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (sgn(c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (k == 0) {
      os << rational_to_string(mag);
      continue;
    }
    if (mag != 1) os << rational_to_string(mag) << "*";
    os << z;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace waring

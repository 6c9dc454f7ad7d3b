#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "waring/cyclotomic.hpp"
#include "waring/error.hpp"
#include "waring/matrix.hpp"

namespace waring {

using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Graded lex, largest first: x1^d precedes x1^(d-1) x2 precedes ...
struct GradedLexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// All exponent vectors of total degree d in n variables, in graded-lex
/// descending order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = left; e >= 0; --e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (d >= 0) rec(rec, 0, d);
  return out;
}

inline Rational binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

inline Rational factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

/// Indexes the monomials of one degree so polynomials become coordinate vectors.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree), list_(monomials_of_degree(nvars, degree)) {
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
  }

  std::size_t size() const { return list_.size(); }
  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Monomial& operator[](std::size_t i) const { return list_[i]; }
  const std::vector<Monomial>& list() const { return list_; }
  std::size_t index(const Monomial& m) const { return index_.at(m); }

 private:
  std::size_t nvars_;
  int degree_;
  std::vector<Monomial> list_;
  std::map<Monomial, std::size_t> index_;
};

/// Homogeneous polynomial with sparse exact coefficients.
class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexDescending>;

  Poly() = default;
  Poly(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {}

  static Poly constant(std::size_t nvars, const Scalar& c) {
    Poly p(nvars, 0);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static Poly variable(std::size_t nvars, std::size_t i) {
    Poly p(nvars, 1);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.add_term(m, Scalar(1));
    return p;
  }

  static Poly monomial(const Monomial& m, const Scalar& c) {
    Poly p(m.size(), total_degree(m));
    p.add_term(m, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Monomial& m, const Scalar& c) {
    if (m.size() != nvars_) fail(ErrorKind::ArityMismatch, "monomial has wrong number of variables");
    if (total_degree(m) != degree_) fail(ErrorKind::ArityMismatch, "monomial degree differs from polynomial degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Coefficients in the given basis of the same degree.
  Vector to_vector(const MonomialBasis& basis) const {
    Vector v(basis.size(), Scalar(0));
    for (const auto& [m, c] : terms_) v[basis.index(m)] = c;
    return v;
  }

  static Poly from_vector(const MonomialBasis& basis, const Vector& v) {
    Poly p(basis.nvars(), basis.degree());
    for (std::size_t i = 0; i < v.size(); ++i) p.add_term(basis[i], v[i]);
    return p;
  }

  /// Least common multiple of the conductors of all coefficients.
  std::uint64_t conductor() const {
    std::uint64_t n = 1;
    for (const auto& [m, c] : terms_)
      if (!c.is_rational()) n = std::lcm(n, c.conductor());
    return n;
  }

  Poly embedded(const FieldContext& ctx) const {
    Poly p(nvars_, degree_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, c.in(ctx));
    return p;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    if (a.is_zero() && a.degree_ != b.degree_) return b;
    if (b.is_zero() && a.degree_ != b.degree_) return a;
    if (a.degree_ != b.degree_) fail(ErrorKind::ArityMismatch, "adding polynomials of different degrees");
    Poly r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Scalar& s) {
    Poly r(a.nvars_, a.degree_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
    return r;
  }
  friend Poly operator*(const Scalar& s, const Poly& a) { return a * s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    Poly r(a.nvars_, a.degree_ + b.degree_);
    Monomial m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }

  /// Equality of values; two zero polynomials are equal whatever their degree.
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (auto ia = a.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  static void check_compatible(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) fail(ErrorKind::ArityMismatch, "polynomials have different numbers of variables");
  }

  std::size_t nvars_ = 0;
  int degree_ = 0;
  Terms terms_;
};

/// Linear form sum_i coeffs[i] * x_i.
struct LinForm {
  Vector coeffs;

  LinForm() = default;
  explicit LinForm(Vector c) : coeffs(std::move(c)) {}

  static LinForm unit(std::size_t nvars, std::size_t i) {
    Vector c(nvars, Scalar(0));
    c[i] = Scalar(1);
    return LinForm(std::move(c));
  }

  std::size_t nvars() const { return coeffs.size(); }

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  /// Index of the first nonzero coefficient.
  std::size_t pivot() const {
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) return i;
    fail(ErrorKind::ZeroInput, "zero linear form");
  }

  /// Projective representative with first nonzero coefficient equal to 1.
  LinForm normalized() const {
    Scalar inv = coeffs[pivot()].inverse();
    LinForm r = *this;
    for (auto& c : r.coeffs) c = c * inv;
    return r;
  }

  Poly to_poly() const {
    Poly p(coeffs.size(), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(LinForm::unit_exponent(coeffs.size(), i), coeffs[i]);
    return p;
  }

  Scalar eval(const Vector& point) const {
    Scalar s(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) s = s + coeffs[i] * point[i];
    return s;
  }

  friend LinForm operator+(const LinForm& a, const LinForm& b) {
    LinForm r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + b.coeffs[i];
    return r;
  }
  friend LinForm operator*(const Scalar& s, const LinForm& a) {
    LinForm r = a;
    for (auto& c : r.coeffs) c = s * c;
    return r;
  }
  friend bool operator==(const LinForm& a, const LinForm& b) { return a.coeffs == b.coeffs; }

  static Monomial unit_exponent(std::size_t n, std::size_t i) {
    Monomial m(n, 0);
    m[i] = 1;
    return m;
  }
};

/// Projective equality: a and b span the same line.
inline bool proportional(const LinForm& a, const LinForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.normalized() == b.normalized();
}

/// Deterministic order on normalized coefficient vectors.
inline bool form_less(const LinForm& a, const LinForm& b) {
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    int c = compare(a.coeffs[i], b.coeffs[i]);
    if (c != 0) return c > 0;
  }
  return false;
}

inline Poly power_of_linform(const LinForm& l, int d) {
  const std::size_t n = l.nvars();
  Poly out(n, d);
  // powers[i][k] = l_i^k
  std::vector<std::vector<Scalar>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    powers[i].reserve(static_cast<std::size_t>(d) + 1);
    powers[i].push_back(Scalar(1));
    for (int k = 1; k <= d; ++k) powers[i].push_back(l.coeffs[i].is_zero() ? Scalar(0) : powers[i].back() * l.coeffs[i]);
  }
  const Rational dfact = factorial(d);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < n; ++i)
    if (!l.coeffs[i].is_zero()) support.push_back(i);
  if (support.empty()) {
    if (d == 0) out.add_term(Monomial(n, 0), Scalar(1));
    return out;
  }
  for (const Monomial& sub : monomials_of_degree(support.size(), d)) {
    Rational multinomial = dfact;
    Scalar c(1);
    Monomial m(n, 0);
    for (std::size_t k = 0; k < support.size(); ++k) {
      multinomial /= factorial(sub[k]);
      m[support[k]] = sub[k];
      if (sub[k] > 0) c = c * powers[support[k]][static_cast<std::size_t>(sub[k])];
    }
    out.add_term(m, c * Scalar(multinomial));
  }
  return out;
}

inline Poly partial_derivative(const Poly& f, std::size_t i) {
  if (i >= f.nvars()) fail(ErrorKind::ArityMismatch, "variable index out of range");
  Poly out(f.nvars(), std::max(f.degree() - 1, 0));
  if (f.degree() == 0) return out;
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial dm = m;
    dm[i] -= 1;
    out.add_term(dm, c * Scalar(m[i]));
  }
  return out;
}

/// sum_i dir[i] * df/dx_i
inline Poly directional_derivative(const Poly& f, const Vector& dir) {
  Poly out(f.nvars(), std::max(f.degree() - 1, 0));
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (!dir[i].is_zero()) out = out + partial_derivative(f, i) * dir[i];
  return out;
}

/// f(A y): A has one row per variable of f and one column per new variable.
inline Poly substitute_linear(const Poly& f, const Matrix& a) {
  if (a.rows() != f.nvars()) fail(ErrorKind::ArityMismatch, "substitution matrix rows must equal the variable count");
  const std::size_t m = a.cols();
  std::vector<LinForm> images;
  for (std::size_t i = 0; i < a.rows(); ++i) images.emplace_back(a.row(i));
  std::vector<std::vector<Poly>> cache(f.nvars());
  auto power = [&](std::size_t i, int k) -> const Poly& {
    auto& c = cache[i];
    if (c.empty()) c.push_back(Poly::constant(m, Scalar(1)));
    while (static_cast<int>(c.size()) <= k) c.push_back(c.back() * images[i].to_poly());
    return c[static_cast<std::size_t>(k)];
  };
  Poly out(m, f.degree());
  for (const auto& [mono, c] : f.terms()) {
    Poly term = Poly::constant(m, c);
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] > 0) term = term * power(i, mono[i]);
    out = out + term;
  }
  return out;
}

/// l(A y) as a linear form in y.
inline LinForm substitute_linear(const LinForm& l, const Matrix& a) {
  Vector c(a.cols(), Scalar(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (l.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero()) c[j] = c[j] + l.coeffs[i] * a(i, j);
  }
  return LinForm(std::move(c));
}

/// Coordinates in which a given linear form becomes a variable:
/// y_pivot = l(x) and y_i = x_i otherwise; x = to_old * y, y = to_new * x.
struct LinearChart {
  std::size_t pivot;
  Matrix to_old;
  Matrix to_new;
};

inline LinearChart chart_for(const LinForm& l) {
  const std::size_t n = l.nvars();
  const std::size_t j = l.pivot();
  Matrix to_new = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) to_new(j, i) = l.coeffs[i];
  Matrix to_old = Matrix::identity(n);
  Scalar inv = l.coeffs[j].inverse();
  for (std::size_t i = 0; i < n; ++i) to_old(j, i) = (i == j) ? inv : -l.coeffs[i] * inv;
  return {j, std::move(to_old), std::move(to_new)};
}

/// g with f = l^k g, or nullopt when l^k does not divide f.
inline std::optional<Poly> divide_by_linear_power(const Poly& f, const LinForm& l, int k) {
  if (f.is_zero()) return Poly(f.nvars(), std::max(f.degree() - k, 0));
  if (k > f.degree()) return std::nullopt;
  LinearChart chart = chart_for(l);
  Poly in_chart = substitute_linear(f, chart.to_old);
  Poly quotient(f.nvars(), f.degree() - k);
  for (const auto& [m, c] : in_chart.terms()) {
    if (m[chart.pivot] < k) return std::nullopt;
    Monomial q = m;
    q[chart.pivot] -= k;
    quotient.add_term(q, c);
  }
  return substitute_linear(quotient, chart.to_new);
}

}  // namespace waring

#pragma once

#include <cstddef>
#include <vector>

#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

/// Matrix of alpha -> alpha . f for degree-e differential operators alpha.
/// Row i is the operator monomial rows[i], column j the monomial cols[j].
struct CatMatrix {
  int order;
  MonomialBasis rows;
  MonomialBasis cols;
  Matrix m;
};

/// d^alpha x^beta = beta!/(beta-alpha)! x^(beta-alpha); zero unless alpha <= beta.
inline Rational falling_factor(const Monomial& beta, const Monomial& alpha) {
  Rational r(1);
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (alpha[i] > beta[i]) return 0;
    for (int k = 0; k < alpha[i]; ++k) r *= beta[i] - k;
  }
  return r;
}

inline CatMatrix catalecticant(const Poly& f, int e) {
  if (e < 0 || e > f.degree()) fail(ErrorKind::OrderOutOfRange, "catalecticant order out of range");
  CatMatrix c{e, MonomialBasis(f.nvars(), e), MonomialBasis(f.nvars(), f.degree() - e), Matrix()};
  c.m = Matrix(c.rows.size(), c.cols.size());
  Monomial beta(f.nvars());
  for (std::size_t i = 0; i < c.rows.size(); ++i)
    for (std::size_t j = 0; j < c.cols.size(); ++j) {
      for (std::size_t v = 0; v < beta.size(); ++v) beta[v] = c.rows[i][v] + c.cols[j][v];
      Scalar coef = f.coeff(beta);
      if (!coef.is_zero()) c.m(i, j) = coef * Scalar(falling_factor(beta, c.rows[i]));
    }
  return c;
}

inline std::size_t catalecticant_rank(const Poly& f, int e) { return exact_rank(catalecticant(f, e).m); }

/// alpha . f for an operator alpha written as a polynomial in the dual variables.
inline Poly apply_operator(const Poly& alpha, const Poly& f) {
  if (alpha.nvars() != f.nvars()) fail(ErrorKind::ArityMismatch, "operator and polynomial differ in variable count");
  Poly out(f.nvars(), std::max(f.degree() - alpha.degree(), 0));
  if (alpha.degree() > f.degree()) return out;
  Monomial gamma(f.nvars());
  for (const auto& [a, ca] : alpha.terms())
    for (const auto& [b, cb] : f.terms()) {
      Rational k = falling_factor(b, a);
      if (k == 0) continue;
      for (std::size_t v = 0; v < gamma.size(); ++v) gamma[v] = b[v] - a[v];
      out.add_term(gamma, ca * cb * Scalar(k));
    }
  return out;
}

/// Basis of Ann(f)_e as operator polynomials.
inline std::vector<Poly> annihilator(const Poly& f, int e) {
  CatMatrix c = catalecticant(f, e);
  std::vector<Poly> out;
  for (const Vector& v : exact_kernel(c.m.transposed())) out.push_back(Poly::from_vector(c.rows, v));
  return out;
}

struct EssentialVars {
  std::size_t m;
  Matrix a;  // x = a * y; f(a y) only involves y_1..y_m
};

inline EssentialVars essential_vars(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "essential variables of the zero polynomial");
  const std::size_t n = f.nvars();
  if (f.degree() == 0) return {0, Matrix::identity(n)};
  // Directions v with sum_i v_i d_i f = 0 become the trailing coordinates.
  std::vector<Vector> kernel = exact_kernel(catalecticant(f, 1).m.transposed());
  const std::size_t m = n - kernel.size();
  IncrementalBasis span(n);
  for (const Vector& v : kernel) span.insert(v);
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n && cols.size() < m; ++i) {
    Vector u(n, Scalar(0));
    u[i] = Scalar(1);
    if (span.insert(u)) cols.push_back(std::move(u));
  }
  cols.insert(cols.end(), kernel.begin(), kernel.end());
  return {m, Matrix::from_rows(cols, n).transposed()};
}

/// Drops variables beyond the first m (valid when f does not involve them).
inline Poly truncate_vars(const Poly& f, std::size_t m) {
  Poly out(m, f.degree());
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t i = m; i < mono.size(); ++i)
      if (mono[i] != 0) fail(ErrorKind::ArityMismatch, "polynomial involves a dropped variable");
    out.add_term(Monomial(mono.begin(), mono.begin() + static_cast<std::ptrdiff_t>(m)), c);
  }
  return out;
}

}  // namespace waring

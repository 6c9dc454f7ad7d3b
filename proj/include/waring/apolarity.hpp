#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <utility>
#include <vector>

#include "waring/catalecticant.hpp"
#include "waring/gad.hpp"
#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

/// Degree-p piece of an ideal of differential operators.
struct GradedSubspace {
  std::size_t nvars = 0;
  int degree = 0;
  std::vector<Poly> basis;

  std::size_t dim() const { return basis.size(); }
};

struct HilbertProfile {
  std::vector<std::size_t> values;
};

inline GradedSubspace ann_graded(const Poly& f, int p) {
  return GradedSubspace{f.nvars(), p, annihilator(f, p)};
}

inline HilbertProfile hilbert_function(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "Hilbert function of the zero polynomial");
  HilbertProfile h;
  for (int p = 0; p <= f.degree(); ++p) h.values.push_back(catalecticant_rank(f, p));
  return h;
}

/// Whether every operator of D kills f; D must sit in degree deg f.
inline bool apolarity_check(const Poly& f, const GradedSubspace& D) {
  if (D.degree != f.degree()) fail(ErrorKind::OrderOutOfRange, "operators must have the degree of f");
  if (D.nvars != f.nvars()) fail(ErrorKind::ArityMismatch, "operators and f differ in variable count");
  for (const Poly& alpha : D.basis)
    if (!apply_operator(alpha, f).is_zero()) return false;
  return true;
}

/// Polynomial of any degree in nvars variables.
struct AffinePoly {
  std::size_t nvars = 0;
  std::map<Monomial, Scalar, GradedLexDescending> terms;

  int degree() const {
    int d = 0;
    for (const auto& [m, c] : terms) d = std::max(d, total_degree(m));
    return d;
  }
  bool is_zero() const { return terms.empty(); }

  void add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms.emplace(m, c);
    if (fresh) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
  }
};

inline AffinePoly partial_derivative(const AffinePoly& g, std::size_t i) {
  AffinePoly out{g.nvars, {}};
  for (const auto& [m, c] : g.terms) {
    if (m[i] == 0) continue;
    Monomial k = m;
    --k[i];
    out.add_term(k, c * Scalar(m[i]));
  }
  return out;
}

/// dim of the span of g and all its iterated partial derivatives.
inline std::size_t derivative_closure_dim(const AffinePoly& g) {
  if (g.is_zero()) return 0;
  // monomials of degree <= D, padded with a slack exponent to degree D
  const int D = g.degree();
  MonomialBasis basis(g.nvars + 1, D);
  auto vec = [&](const AffinePoly& h) {
    Vector v(basis.size(), Scalar(0));
    for (const auto& [m, c] : h.terms) {
      Monomial padded = m;
      padded.push_back(D - total_degree(m));
      v[basis.index(padded)] = c;
    }
    return v;
  };
  IncrementalBasis span(basis.size());
  std::deque<AffinePoly> queue{g};
  span.insert(vec(g));
  while (!queue.empty()) {
    AffinePoly h = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < g.nvars; ++i) {
      AffinePoly dh = partial_derivative(h, i);
      if (!dh.is_zero() && span.insert(vec(dh))) queue.push_back(std::move(dh));
    }
  }
  return span.rank();
}

struct Compression {
  AffinePoly g;
  std::size_t size = 0;
};

/// Compression along the first row of coords, an invertible matrix whose
/// rows are the new coordinates y = coords * x; g lives in y_2..y_n.
inline Compression compression(const Poly& f, const Matrix& coords) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "compression of the zero polynomial");
  const std::size_t n = f.nvars();
  if (coords.rows() != n || coords.cols() != n) fail(ErrorKind::ArityMismatch, "coordinate matrix has the wrong size");
  auto back = inverse(coords);
  if (!back) fail(ErrorKind::Usage, "coordinate matrix is singular");
  Poly fy = substitute_linear(f, *back);
  Compression out{AffinePoly{n - 1, {}}, 0};
  // f = sum_i y_1^i / i! f_i
  for (const auto& [m, c] : fy.terms()) {
    Monomial rest(m.begin() + 1, m.end());
    out.g.add_term(rest, c * Scalar(factorial(m[0])));
  }
  out.size = derivative_closure_dim(out.g);
  return out;
}

inline Compression compression(const Poly& f, const LinForm& l) {
  if (l.is_zero()) fail(ErrorKind::ZeroInput, "compression along the zero form");
  if (l.nvars() != f.nvars()) fail(ErrorKind::ArityMismatch, "form and polynomial differ in variable count");
  const std::size_t n = f.nvars();
  const std::size_t p = l.pivot();
  std::vector<Vector> rows{l.coeffs};
  for (std::size_t i = 0; i < n; ++i)
    if (i != p) rows.push_back(LinForm::unit(n, i).coeffs);
  return compression(f, Matrix::from_rows(rows, n));
}

inline std::size_t gad_size(const GAD& g) {
  std::size_t total = 0;
  for (std::size_t k = 0; k < g.parts.size(); ++k) {
    Poly part = g.part_polynomial(k);
    if (!part.is_zero()) total += compression(part, g.parts[k].l).size;
  }
  return total;
}

}  // namespace waring

#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "waring/border.hpp"
#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

inline void PrintTo(const Poly& f, std::ostream* os) {
  if (f.is_zero()) *os << "0";
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    *os << (first ? "" : " + ") << "(" << to_string(c) << ")";
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) *os << "*x" << i << (m[i] > 1 ? "^" + std::to_string(m[i]) : "");
    first = false;
  }
}

inline void PrintTo(const LinForm& l, std::ostream* os) {
  *os << "[";
  for (std::size_t i = 0; i < l.coeffs.size(); ++i) *os << (i ? " " : "") << to_string(l.coeffs[i]);
  *os << "]";
}

}  // namespace waring

namespace testutil {

using namespace waring;

inline Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i); }

inline Poly pow(const Poly& p, int k) {
  Poly r = Poly::constant(p.nvars(), Scalar(1));
  for (int i = 0; i < k; ++i) r = r * p;
  return r;
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t n, int d, int density = 3) {
  std::uniform_int_distribution<int> coef(-5, 5), keep(0, density);
  Poly f(n, d);
  for (const auto& m : monomials_of_degree(n, d))
    if (keep(rng) == 0) f.add_term(m, Scalar(coef(rng)));
  if (f.is_zero()) f.add_term(monomials_of_degree(n, d).front(), Scalar(1));
  return f;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  for (;;) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = Scalar(coef(rng));
    if (exact_rank(a) == n) return a;
  }
}

inline LinForm random_form(std::mt19937_64& rng, std::size_t n, int bound = 3) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (;;) {
    Vector v(n);
    for (auto& c : v) c = Scalar(coef(rng));
    LinForm l(std::move(v));
    if (!l.is_zero()) return l;
  }
}

/// Pairwise non-proportional random forms.
inline std::vector<LinForm> distinct_forms(std::mt19937_64& rng, std::size_t n, std::size_t count, int bound = 3) {
  std::vector<LinForm> out;
  while (out.size() < count) {
    LinForm l = random_form(rng, n, bound);
    bool fresh = true;
    for (const auto& k : out) fresh = fresh && !proportional(k, l);
    if (fresh) out.push_back(std::move(l));
  }
  return out;
}

// x0^{d-1} y0 + x1^{d-1} y1 + 2 (x0+x1)^{d-1} y2 in variables x0 x1 y0 y1 y2
inline Poly eq1(int d) {
  const std::size_t n = 5;
  Poly x0 = var(n, 0), x1 = var(n, 1);
  return pow(x0, d - 1) * var(n, 2) + pow(x1, d - 1) * var(n, 3) + Scalar(2) * pow(x0 + x1, d - 1) * var(n, 4);
}

inline EpsLinForm eps_form(const LinForm& l) {
  EpsLinForm out;
  for (const auto& c : l.coeffs) out.emplace_back(c);
  return out;
}

/// Random border decomposition built from local finite-difference families:
/// a class of size m + 1 with base l and direction L contributes
///   lambda / eps^m * sum_j (-1)^(m-j) C(m, j) u_j (l + j eps L + eps^(m+1) M_j)^d,
/// u_j = 1 / (1 + a_j eps^(m+1)), whose limit is lambda d!/(d-m)! l^(d-m) L^m.
/// Also returns that limit, computed without any eps arithmetic.
struct RandomBorder {
  BorderDecomposition border;
  Poly limit;
};

inline RandomBorder random_local_border(std::mt19937_64& rng, std::size_t n, int r, int d) {
  std::uniform_int_distribution<int> small(-3, 3), lam(1, 4);
  std::vector<int> sizes;
  for (int left = r; left > 0;) {
    int s = std::uniform_int_distribution<int>(1, left)(rng);
    sizes.push_back(s);
    left -= s;
  }
  auto bases = distinct_forms(rng, n, sizes.size());
  const EpsScalar e = EpsScalar::eps();
  RandomBorder out{BorderDecomposition{n, d, {}}, Poly(n, d)};
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const int m = sizes[k] - 1;
    const LinForm& l = bases[k];
    LinForm L = random_form(rng, n);
    Rational q(lam(rng) * (small(rng) >= 0 ? 1 : -1), lam(rng));
    q.canonicalize();
    const Scalar lambda(q);
    Rational fall = 1;
    for (int i = 0; i < m; ++i) fall *= d - i;
    out.limit = out.limit + pow(l.to_poly(), d - m) * pow(L.to_poly(), m) * (lambda * Scalar(fall));
    for (int j = 0; j <= m; ++j) {
      EpsLinForm form = eps_form(l);
      LinForm M = random_form(rng, n);
      for (std::size_t i = 0; i < n; ++i)
        form[i] = form[i] + EpsScalar(Scalar(j)) * e * EpsScalar(L.coeffs[i]) + e.pow(m + 1) * EpsScalar(M.coeffs[i]);
      Rational c = binomial(m, j) * ((m - j) % 2 ? -1 : 1);
      EpsScalar u = EpsScalar(1) / (EpsScalar(1) + EpsScalar(Scalar(small(rng))) * e.pow(m + 1));
      out.border.summands.push_back({EpsScalar(lambda * Scalar(c)) * u / e.pow(m), std::move(form)});
    }
  }
  return out;
}

}  // namespace testutil

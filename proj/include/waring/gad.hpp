#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "waring/border.hpp"
#include "waring/matrix.hpp"
#include "waring/poly.hpp"

namespace waring {

/// One summand l^(d-r+1) g with deg g = r - 1.
struct GadPart {
  LinForm l;
  int r = 1;
  Poly g;
};

struct GAD {
  std::size_t nvars = 0;
  int degree = 0;
  std::vector<GadPart> parts;

  Poly part_polynomial(std::size_t k) const {
    const auto& p = parts[k];
    return power_of_linform(p.l, degree - p.r + 1) * p.g;
  }

  Poly polynomial() const {
    Poly f(nvars, degree);
    for (std::size_t k = 0; k < parts.size(); ++k) f = f + part_polynomial(k);
    return f;
  }

  std::uint64_t conductor() const {
    std::uint64_t n = 1;
    for (const auto& p : parts) {
      for (const auto& c : p.l.coeffs)
        if (!c.is_rational()) n = std::lcm(n, c.conductor());
      n = std::lcm(n, p.g.conductor());
    }
    return n;
  }
};

struct GadExtraction {
  GAD gad;
  std::vector<LocalClass> classes;
  /// Class members of each part; their limit is that part's polynomial.
  std::vector<BorderDecomposition> witnesses;
};

inline GadExtraction extract_gad_detailed(const BorderDecomposition& b) {
  GadExtraction out{GAD{b.nvars, b.degree, {}}, {}, {}};
  const int r = static_cast<int>(b.size());
  if (r == 0) return out;
  const int d = b.degree;
  if (d < r - 1)
    fail(ErrorKind::DegreeTooLow, "degree " + std::to_string(d) + " is below r - 1 = " + std::to_string(r - 1));
  (void)limit_of_decomposition(b);
  out.classes = group_local_classes(b);
  for (const auto& c : out.classes) {
    if (c.dropped()) continue;
    if (c.q < 0)
      fail(ErrorKind::CrossClassCancellation,
           "a local class has valuation " + std::to_string(c.q) + " although the total limit exists");
  }
  for (const auto& c : out.classes) {
    if (c.dropped()) continue;
    const int rk = static_cast<int>(c.indices.size());
    auto g = divide_by_linear_power(c.leading, c.base, d - rk + 1);
    if (!g) fail(ErrorKind::LocalStructureViolation, "class limit is not divisible by base^(d - r_k + 1)");
    out.gad.parts.push_back({c.base, rk, std::move(*g)});
    out.witnesses.push_back(b.subset(c.indices));
  }
  return out;
}

inline GAD extract_gad(const BorderDecomposition& b) { return extract_gad_detailed(b).gad; }

struct GadCheck {
  bool ok;
  std::string reason;
  explicit operator bool() const { return ok; }
};

inline GadCheck verify_gad(const GAD& g, const Poly& f) {
  if (g.nvars != f.nvars()) return {false, "variable count differs"};
  if (!f.is_zero() && g.degree != f.degree()) return {false, "degree differs"};
  for (std::size_t k = 0; k < g.parts.size(); ++k) {
    const auto& p = g.parts[k];
    const std::string tag = "part " + std::to_string(k + 1) + ": ";
    if (p.l.nvars() != g.nvars || p.g.nvars() != g.nvars) return {false, tag + "variable count differs"};
    if (p.l.is_zero()) return {false, tag + "zero linear form"};
    if (p.r < 1 || p.r > g.degree + 1) return {false, tag + "r_k out of range"};
    if (!p.g.is_zero() && p.g.degree() != p.r - 1) return {false, tag + "deg g_k != r_k - 1"};
    for (std::size_t j = 0; j < k; ++j)
      if (proportional(p.l, g.parts[j].l))
        return {false, tag + "linear form proportional to part " + std::to_string(j + 1)};
  }
  if (g.polynomial() != f) return {false, "parts do not sum to the polynomial"};
  return {true, ""};
}

/// dim of sum_k l_k^(d - r_k + 1) * S_(r_k - 1) inside S_d.
inline std::size_t jordan_independence_dim(const std::vector<std::pair<LinForm, int>>& parts, int d) {
  if (parts.empty()) return 0;
  const std::size_t n = parts.front().first.nvars();
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (proportional(parts[i].first, parts[j].first)) fail(ErrorKind::ProportionalForms, "proportional linear forms");
  MonomialBasis target(n, d);
  std::vector<Vector> rows;
  for (const auto& [l, r] : parts) {
    if (r < 1 || r > d + 1) fail(ErrorKind::OrderOutOfRange, "r_k out of range");
    Poly head = power_of_linform(l, d - r + 1);
    for (const Monomial& m : monomials_of_degree(n, r - 1)) rows.push_back((head * Poly::monomial(m, Scalar(1))).to_vector(target));
  }
  return exact_rank(Matrix::from_rows(rows, target.size()));
}

}  // namespace waring

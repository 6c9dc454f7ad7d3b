#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "waring/binary.hpp"
#include "waring/catalecticant.hpp"
#include "waring/matrix.hpp"
#include "waring/poly.hpp"
#include "waring/roots.hpp"

namespace waring {

enum class FormTag { Power, Sum2, Tangent, Sum3, Sum1Tangent, Bwr3Local, Higher, Unknown };

inline constexpr std::string_view to_string(FormTag t) {
  switch (t) {
    case FormTag::Power: return "POWER";
    case FormTag::Sum2: return "SUM2";
    case FormTag::Tangent: return "TANGENT";
    case FormTag::Sum3: return "SUM3";
    case FormTag::Sum1Tangent: return "SUM1_TANGENT";
    case FormTag::Bwr3Local: return "BWR3_LOCAL";
    case FormTag::Higher: return "HIGHER";
    case FormTag::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

inline std::optional<FormTag> parse_form_tag(std::string_view s) {
  for (auto t : {FormTag::Power, FormTag::Sum2, FormTag::Tangent, FormTag::Sum3, FormTag::Sum1Tangent, FormTag::Bwr3Local,
                 FormTag::Higher, FormTag::Unknown})
    if (to_string(t) == s) return t;
  return std::nullopt;
}

enum class CertificateKind { LowerBoundCatalecticant, ExactBinaryWaring, ExactBinaryBorder, Classification };

inline constexpr std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::LowerBoundCatalecticant: return "lower_bound_catalecticant";
    case CertificateKind::ExactBinaryWaring: return "exact_binary_waring";
    case CertificateKind::ExactBinaryBorder: return "exact_binary_border";
    case CertificateKind::Classification: return "classification";
  }
  return "classification";
}

/// Coefficients and forms instantiating a normal form:
///   POWER         c1 l1^d
///   SUM2, SUM3    sum_i ci li^d
///   TANGENT       c1 l1^(d-1) l2
///   SUM1_TANGENT  c1 l1^d + c2 l2^(d-1) l3
///   BWR3_LOCAL    c1 l1^(d-1) l2 + c2 l1^(d-2) l3^2
struct NormalFormWitness {
  std::vector<Scalar> coeffs;
  std::vector<LinForm> forms;
};

struct RankCertificate {
  CertificateKind kind = CertificateKind::Classification;
  int value = 0;
  FormTag tag = FormTag::Unknown;
  std::optional<NormalFormWitness> witness;
  std::string note;
};

inline Poly normal_form_polynomial(FormTag tag, int d, const NormalFormWitness& w) {
  const auto& c = w.coeffs;
  const auto& l = w.forms;
  auto need = [&](std::size_t nc, std::size_t nl) {
    if (c.size() != nc || l.size() != nl) fail(ErrorKind::InvalidFamily, "witness has the wrong shape");
  };
  auto pw = [&](std::size_t i, int k) { return power_of_linform(l[i], k); };
  switch (tag) {
    case FormTag::Power:
      need(1, 1);
      return pw(0, d) * c[0];
    case FormTag::Sum2:
    case FormTag::Sum3: {
      need(tag == FormTag::Sum2 ? 2 : 3, tag == FormTag::Sum2 ? 2 : 3);
      Poly f = pw(0, d) * c[0];
      for (std::size_t i = 1; i < l.size(); ++i) f = f + pw(i, d) * c[i];
      return f;
    }
    case FormTag::Tangent:
      need(1, 2);
      return pw(0, d - 1) * l[1].to_poly() * c[0];
    case FormTag::Sum1Tangent:
      need(2, 3);
      return pw(0, d) * c[0] + pw(1, d - 1) * l[2].to_poly() * c[1];
    case FormTag::Bwr3Local:
      need(2, 3);
      return pw(0, d - 1) * l[1].to_poly() * c[0] + pw(0, d - 2) * pw(2, 2) * c[1];
    default:
      fail(ErrorKind::InvalidFamily, "tag has no normal form");
  }
}

inline bool verify_certificate(const RankCertificate& cert, const Poly& f) {
  if (!cert.witness) return true;
  try {
    return normal_form_polynomial(cert.tag, f.degree(), *cert.witness) == f;
  } catch (const Error&) {
    return false;
  }
}

/// max_e rank Cat_e(f); a lower bound for Waring and border Waring rank.
inline int catalecticant_lower_bound(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "lower bound of the zero polynomial");
  std::size_t best = 0;
  for (int e = 0; e <= f.degree() / 2; ++e) best = std::max(best, catalecticant_rank(f, e));
  return static_cast<int>(best);
}

struct BinaryRanks {
  int wr;
  int bwr;
};

inline BinaryRanks binary_exact_ranks(const Poly& f) {
  if (f.nvars() != 2) fail(ErrorKind::ArityMismatch, "binary form expected");
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "ranks of the zero polynomial");
  const int d = f.degree();
  const int bwr = static_cast<int>(catalecticant_rank(f, d / 2));
  if (d == 0) return {1, 1};
  for (int r = bwr; r <= d; ++r)
    if (span_has_squarefree(annihilator(f, r))) return {r, bwr};
  return {d + 1, bwr};
}

namespace detail {

/// Weights c with f = sum_i c_i l_i^d, if they exist.
inline std::optional<std::vector<Scalar>> solve_power_weights(const Poly& f, const std::vector<LinForm>& forms) {
  MonomialBasis basis(f.nvars(), f.degree());
  Matrix m(basis.size(), forms.size());
  for (std::size_t j = 0; j < forms.size(); ++j) {
    Vector col = power_of_linform(forms[j], f.degree()).to_vector(basis);
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = col[i];
  }
  auto c = solve(m, f.to_vector(basis));
  if (!c) return std::nullopt;
  for (const auto& x : *c)
    if (x.is_zero()) return std::nullopt;
  return *c;
}

/// Symmetric matrix S with q(y) = y^T S y.
inline Matrix quadric_matrix(const Poly& q) {
  const std::size_t n = q.nvars();
  Matrix s(n, n);
  for (const auto& [m, c] : q.terms()) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < m[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      s(idx[0], idx[0]) = c;
    } else {
      Scalar h = c * Scalar(Rational(1, 2));
      s(idx[0], idx[1]) = h;
      s(idx[1], idx[0]) = h;
    }
  }
  return s;
}

/// q = sum c_i l_i^2 with rank(q) terms.
inline NormalFormWitness diagonalize_quadric(const Poly& q) {
  NormalFormWitness w;
  Matrix s = quadric_matrix(q);
  const std::size_t n = q.nvars();
  auto value = [&](const Vector& v) {
    Scalar acc(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!s(i, j).is_zero() && !v[i].is_zero() && !v[j].is_zero()) acc = acc + s(i, j) * v[i] * v[j];
    return acc;
  };
  for (;;) {
    std::optional<Vector> v;
    for (std::size_t i = 0; i < n && !v; ++i)
      for (std::size_t j = i; j < n && !v; ++j) {
        Vector u(n, Scalar(0));
        u[i] = Scalar(1);
        if (j != i) u[j] = Scalar(1);
        if (!value(u).is_zero()) v = u;
      }
    if (!v) break;
    Scalar qv = value(*v);
    Vector sv = s * *v;
    w.coeffs.push_back(qv.inverse());
    w.forms.emplace_back(sv);
    // s -= (s v)(s v)^T / q(v)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = s(i, j) - sv[i] * sv[j] / qv;
  }
  return w;
}

inline Vector cross(const Vector& a, const Vector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

/// Writes q = l1 * l2 + c * l3^2 for a given l1, when q mod l1 has rank one.
inline std::optional<std::pair<Scalar, std::pair<LinForm, LinForm>>> split_local_quadric(const Poly& q, const LinForm& l1) {
  LinearChart chart = chart_for(l1);
  Poly qt = substitute_linear(q, chart.to_old);
  Poly rest(q.nvars(), 2);
  for (const auto& [m, c] : qt.terms())
    if (m[chart.pivot] == 0) rest.add_term(m, c);
  if (rest.is_zero()) return std::nullopt;
  Matrix s = quadric_matrix(rest);
  if (exact_rank(s) != 1) return std::nullopt;
  std::size_t i = 0;
  while (s(i, i).is_zero()) ++i;
  const Scalar c = s(i, i).inverse();
  LinForm l3t(s.row(i));
  auto l2t = divide_by_linear_power(qt - power_of_linform(l3t, 2) * c, LinForm::unit(q.nvars(), chart.pivot), 1);
  if (!l2t) return std::nullopt;
  Vector l2c(q.nvars(), Scalar(0));
  for (const auto& [m, v] : l2t->terms())
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] == 1) l2c[k] = v;
  return std::make_pair(c, std::make_pair(substitute_linear(LinForm(l2c), chart.to_new),
                                          substitute_linear(l3t, chart.to_new)));
}

inline LinForm form_from_poly(const Poly& p) {
  Vector c(p.nvars(), Scalar(0));
  for (const auto& [m, v] : p.terms())
    for (std::size_t k = 0; k < m.size(); ++k)
      if (m[k] == 1) c[k] = v;
  return LinForm(std::move(c));
}

inline std::optional<NormalFormWitness> checked(FormTag tag, const Poly& f, NormalFormWitness w) {
  try {
    if (normal_form_polynomial(tag, f.degree(), w) == f) return w;
  } catch (const Error&) {
  }
  return std::nullopt;
}

inline std::optional<NormalFormWitness> bwr3_local_witness(const Poly& f, const LinForm& l1) {
  const int d = f.degree();
  auto q = divide_by_linear_power(f, l1, d - 2);
  if (!q) return std::nullopt;
  auto split = split_local_quadric(*q, l1);
  if (!split) return std::nullopt;
  NormalFormWitness w{{Scalar(1), split->first}, {l1, split->second.first, split->second.second}};
  return checked(FormTag::Bwr3Local, f, std::move(w));
}

inline std::optional<NormalFormWitness> sum1_tangent_witness(const Poly& f, const LinForm& l1, const LinForm& l2) {
  // f = c l1^d + l2^(d-1) (sum_k u_k x_k), linear in (c, u)
  const int d = f.degree();
  const std::size_t n = f.nvars();
  MonomialBasis basis(n, d);
  std::vector<Vector> cols{power_of_linform(l1, d).to_vector(basis)};
  Poly head = power_of_linform(l2, d - 1);
  for (std::size_t k = 0; k < n; ++k) cols.push_back((head * Poly::variable(n, k)).to_vector(basis));
  Matrix m = Matrix::from_rows(cols, basis.size()).transposed();
  auto sol = solve(m, f.to_vector(basis));
  if (!sol) return std::nullopt;
  Vector u(sol->begin() + 1, sol->end());
  NormalFormWitness w{{(*sol)[0], Scalar(1)}, {l1, l2, LinForm(u)}};
  return checked(FormTag::Sum1Tangent, f, std::move(w));
}

struct Reduction {
  std::size_t m;
  Poly reduced;
  Matrix back;  // maps reduced coordinates back: l(x) = l~(back x)
};

inline Reduction reduce_to_essential(const Poly& f) {
  EssentialVars ev = essential_vars(f);
  return {ev.m, truncate_vars(substitute_linear(f, ev.a), ev.m), *inverse(ev.a)};
}

inline LinForm lift(const LinForm& l, const Reduction& r) {
  Vector padded(r.back.rows(), Scalar(0));
  for (std::size_t i = 0; i < l.nvars(); ++i) padded[i] = l.coeffs[i];
  return substitute_linear(LinForm(std::move(padded)), r.back);
}

inline RankCertificate classify_binary(const Poly& h) {
  const int d = h.degree();
  RankCertificate cert;
  const int bwr = static_cast<int>(catalecticant_rank(h, d / 2));
  cert.value = bwr;
  if (bwr >= 4) {
    cert.tag = FormTag::Higher;
    cert.note = "middle catalecticant rank " + std::to_string(bwr);
    return cert;
  }
  const FormTag generic = bwr == 2 ? FormTag::Sum2 : FormTag::Sum3;
  std::vector<Poly> kernel = annihilator(h, bwr);
  auto power_witness = [&](const Poly& phi) -> std::optional<NormalFormWitness> {
    auto roots = rational_binary_roots(phi);
    if (!roots) return std::nullopt;
    std::vector<LinForm> forms;
    for (const auto& r : *roots) {
      if (r.multiplicity != 1) return std::nullopt;
      forms.push_back(r.form);
    }
    auto c = solve_power_weights(h, forms);
    if (!c) return std::nullopt;
    return checked(generic, h, NormalFormWitness{*c, forms});
  };
  if (kernel.size() >= 2) {
    // The apolar ideal has no base points here, so a generic member is square-free.
    cert.tag = generic;
    cert.note = "pencil of apolar forms in degree " + std::to_string(bwr);
    for (int t = 0; t < 12 && !cert.witness; ++t) {
      const int step = t % 2 == 1 ? (t + 1) / 2 : -(t / 2);
      Poly phi = kernel[0] + kernel[1] * Scalar(step);
      if (is_squarefree(phi)) cert.witness = power_witness(phi);
    }
    return cert;
  }
  const Poly& phi = kernel.front();
  const std::vector<int> pattern = multiplicity_pattern(phi);
  auto roots = rational_binary_roots(phi);
  auto root_with = [&](int mult) -> std::optional<LinForm> {
    if (!roots) return std::nullopt;
    for (const auto& r : *roots)
      if (r.multiplicity == mult) return r.form;
    return std::nullopt;
  };
  if (pattern.front() == 1) {
    cert.tag = generic;
    cert.witness = power_witness(phi);
  } else if (bwr == 2) {
    cert.tag = FormTag::Tangent;
    if (auto l1 = root_with(2))
      if (auto l2 = divide_by_linear_power(h, *l1, d - 1))
        cert.witness = checked(FormTag::Tangent, h, NormalFormWitness{{Scalar(1)}, {*l1, form_from_poly(*l2)}});
  } else if (pattern.front() == 2) {
    cert.tag = FormTag::Sum1Tangent;
    auto l1 = root_with(1), l2 = root_with(2);
    if (l1 && l2) cert.witness = sum1_tangent_witness(h, *l1, *l2);
  } else {
    cert.tag = FormTag::Bwr3Local;
    if (auto l1 = root_with(3)) cert.witness = bwr3_local_witness(h, *l1);
  }
  cert.note = "apolar form of degree " + std::to_string(bwr) + " with root multiplicities";
  for (int k : pattern) cert.note += " " + std::to_string(k);
  return cert;
}

/// det(a M1 + b M2 + c M3) as a ternary cubic in (a, b, c).
inline Poly net_discriminant(const std::vector<Matrix>& ms) {
  const std::size_t n = 3;
  std::vector<std::vector<Poly>> e(n, std::vector<Poly>(n, Poly(3, 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        if (!ms[k](i, j).is_zero()) e[i][j] = e[i][j] + Poly::variable(3, k) * ms[k](i, j);
  return e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
         e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
}

inline Matrix net_member(const std::vector<Matrix>& ms, const Vector& w) {
  Matrix m(3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = m(i, j) + ms[k](i, j) * w[k];
  return m;
}

inline std::optional<RatPoly> restrict_to_line(const Poly& d, const Vector& p, const Vector& q) {
  // d(p + t q) by interpolation at deg + 1 integer points
  const int deg = d.degree();
  std::vector<Rational> xs, ys;
  for (int t = 0; t <= deg; ++t) {
    Vector pt(3);
    for (std::size_t i = 0; i < 3; ++i) pt[i] = p[i] + q[i] * Scalar(t);
    Scalar v(0);
    for (const auto& [m, c] : d.terms()) {
      Scalar term = c;
      for (std::size_t i = 0; i < 3; ++i) term = term * pt[i].pow(m[i]);
      v = v + term;
    }
    if (!v.is_rational()) return std::nullopt;
    xs.push_back(t);
    ys.push_back(v.rational_value());
  }
  RatPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RatPoly basis(Rational(1));
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * RatPoly(std::vector<Rational>{-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    acc = acc + basis * Rational(ys[i] / denom);
  }
  return acc;
}

/// l with a + t b proportional to l l^T for some t (possibly t = infinity).
inline std::optional<LinForm> rank_one_member(const Matrix& a, const Matrix& b) {
  auto from = [](const Matrix& m) -> std::optional<LinForm> {
    if (exact_rank(m) != 1) return std::nullopt;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, i).is_zero()) return LinForm(m.row(i));
    return std::nullopt;
  };
  if (auto l = from(a)) return l;
  if (auto l = from(b)) return l;
  // gcd over all 2x2 minors of a + t b
  ScalarPoly g;
  const std::size_t n = a.rows();
  auto entry = [&](std::size_t i, std::size_t j) { return ScalarPoly(std::vector<Scalar>{a(i, j), b(i, j)}); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) g = gcd(g, entry(i, k) * entry(j, l) - entry(i, l) * entry(j, k));
  if (g.degree() < 1) return std::nullopt;
  g = divmod(g, gcd(g, g.derivative())).first;
  if (g.degree() != 1) return std::nullopt;
  const Scalar t = -g[0] / g[1];
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j) + t * b(i, j);
  return from(m);
}

inline RankCertificate classify_ternary(const Poly& h) {
  const int d = h.degree();
  RankCertificate cert;
  const int lb = catalecticant_lower_bound(h);
  cert.value = lb;
  if (lb > 3) {
    cert.tag = FormTag::Higher;
    cert.note = "catalecticant rank " + std::to_string(lb);
    return cert;
  }
  cert.value = 3;
  CatMatrix cat = catalecticant(h, d - 2);
  Echelon ech = row_reduce(cat.m);
  if (ech.pivots.size() != 3) {
    cert.tag = FormTag::Unknown;
    cert.note = "space of order-(d-2) derivatives is not a net";
    return cert;
  }
  std::vector<Matrix> ms;
  for (std::size_t i = 0; i < 3; ++i) ms.push_back(quadric_matrix(Poly::from_vector(cat.cols, ech.reduced.row(i))));
  Poly disc = net_discriminant(ms);
  if (disc.is_zero()) {
    cert.tag = FormTag::Unknown;
    cert.note = "every quadric in the derivative net is singular";
    return cert;
  }
  if (essential_vars(disc).m == 1) {
    // disc = c L^3; the quadrics on L = 0 form the pencil l1 * (a l1 + b l3),
    // whose rank-one member is a multiple of l1^2.
    CatMatrix dc = catalecticant(disc, 2);
    LinForm line = form_from_poly(Poly::from_vector(dc.cols, row_reduce(dc.m).reduced.row(0)));
    std::vector<Vector> pts = exact_kernel(Matrix::from_rows({line.coeffs}, 3));
    if (auto l1 = rank_one_member(net_member(ms, pts[0]), net_member(ms, pts[1])))
      if (auto w = bwr3_local_witness(h, *l1)) {
        cert.tag = FormTag::Bwr3Local;
        cert.witness = w;
        cert.note = "net discriminant is a triple line";
        return cert;
      }
    cert.tag = FormTag::Unknown;
    cert.note = "net discriminant is a triple line but no local witness was found";
    return cert;
  }
  const std::vector<std::pair<Vector, Vector>> lines = {
      {{Scalar(1), Scalar(2), Scalar(-3)}, {Scalar(2), Scalar(-1), Scalar(5)}},
      {{Scalar(3), Scalar(-1), Scalar(2)}, {Scalar(-2), Scalar(5), Scalar(1)}},
      {{Scalar(1), Scalar(0), Scalar(4)}, {Scalar(1), Scalar(7), Scalar(-2)}},
      {{Scalar(5), Scalar(3), Scalar(1)}, {Scalar(-1), Scalar(2), Scalar(11)}},
  };
  for (const auto& [p, q] : lines) {
    auto r = restrict_to_line(disc, p, q);
    if (!r || r->degree() != 3) continue;
    std::vector<std::pair<Vector, int>> pts;
    int total = 0;
    for (const Rational& t : rational_roots(*r)) {
      RatPoly lin(std::vector<Rational>{-t, Rational(1)});
      RatPoly rest = *r;
      int mult = 0;
      for (;;) {
        auto [qq, rem] = divmod(rest, lin);
        if (!rem.is_zero()) break;
        rest = qq;
        ++mult;
      }
      Vector w(3);
      for (std::size_t i = 0; i < 3; ++i) w[i] = p[i] + q[i] * Scalar(t);
      pts.emplace_back(w, mult);
      total += mult;
    }
    if (total != 3) continue;
    auto kernel_point = [&](const Vector& w) -> std::optional<Vector> {
      auto k = exact_kernel(net_member(ms, w));
      if (k.size() != 1) return std::nullopt;
      return k[0];
    };
    if (pts.size() == 3) {
      std::vector<Vector> v;
      for (const auto& [w, m] : pts)
        if (auto k = kernel_point(w)) v.push_back(*k);
      if (v.size() != 3) continue;
      std::vector<LinForm> forms{LinForm(cross(v[1], v[2])), LinForm(cross(v[2], v[0])), LinForm(cross(v[0], v[1]))};
      if (auto c = solve_power_weights(h, forms))
        if (auto w = checked(FormTag::Sum3, h, NormalFormWitness{*c, forms})) {
          cert.tag = FormTag::Sum3;
          cert.witness = w;
          cert.note = "net discriminant splits into three lines";
          return cert;
        }
    } else if (pts.size() == 2) {
      const Vector& simple = pts[0].second == 1 ? pts[0].first : pts[1].first;
      const Vector& dbl = pts[0].second == 2 ? pts[0].first : pts[1].first;
      auto v1 = kernel_point(simple), v2 = kernel_point(dbl);
      if (!v1 || !v2) continue;
      LinForm l2(cross(*v1, *v2));
      Poly g = h;
      for (int k = 0; k < d - 1; ++k) g = directional_derivative(g, *v1);
      if (g.is_zero() || l2.is_zero()) continue;
      if (auto w = sum1_tangent_witness(h, form_from_poly(g), l2)) {
        cert.tag = FormTag::Sum1Tangent;
        cert.witness = w;
        cert.note = "net discriminant is a line times a double line";
        return cert;
      }
    }
  }
  cert.tag = FormTag::Unknown;
  cert.note = "no normal form criterion applies";
  return cert;
}

/// Rescales every form to leading coefficient 1, absorbing the factors into the coefficients.
inline void normalize_witness(FormTag tag, int d, NormalFormWitness& w) {
  // exponent of form i in the term carrying coefficient j
  std::vector<std::vector<int>> e;
  switch (tag) {
    case FormTag::Power: e = {{d}}; break;
    case FormTag::Sum2: e = {{d, 0}, {0, d}}; break;
    case FormTag::Sum3: e = {{d, 0, 0}, {0, d, 0}, {0, 0, d}}; break;
    case FormTag::Tangent: e = {{d - 1, 1}}; break;
    case FormTag::Sum1Tangent: e = {{d, 0, 0}, {0, d - 1, 1}}; break;
    case FormTag::Bwr3Local: e = {{d - 1, 1, 0}, {d - 2, 0, 2}}; break;
    default: return;
  }
  if (w.coeffs.size() != e.size() || w.forms.size() != e[0].size()) return;
  for (std::size_t i = 0; i < w.forms.size(); ++i) {
    if (w.forms[i].is_zero()) continue;
    const Scalar lambda = w.forms[i].coeffs[w.forms[i].pivot()];
    w.forms[i] = w.forms[i].normalized();
    for (std::size_t j = 0; j < w.coeffs.size(); ++j) w.coeffs[j] = w.coeffs[j] * lambda.pow(e[j][i]);
  }
}

}  // namespace detail

inline RankCertificate classify_small_border(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroInput, "classification of the zero polynomial");
  const int d = f.degree();
  detail::Reduction red = detail::reduce_to_essential(f);
  RankCertificate cert;
  auto lift_witness = [&](RankCertificate c) {
    if (c.witness) {
      for (auto& l : c.witness->forms) l = detail::lift(l, red);
      detail::normalize_witness(c.tag, d, *c.witness);
    }
    return c;
  };
  if (red.m <= 1) {
    cert.value = 1;
    cert.tag = FormTag::Power;
    if (red.m == 0) {
      cert.witness = NormalFormWitness{{f.terms().begin()->second}, {LinForm::unit(f.nvars(), 0)}};
      return cert;
    }
    cert.witness = NormalFormWitness{{red.reduced.terms().begin()->second}, {LinForm::unit(1, 0)}};
    return lift_witness(cert);
  }
  if (d == 2) {
    cert.value = static_cast<int>(red.m);
    if (red.m > 3) {
      cert.tag = FormTag::Unknown;
      cert.note = "quadric of rank " + std::to_string(red.m);
      return cert;
    }
    cert.tag = red.m == 2 ? FormTag::Sum2 : FormTag::Sum3;
    cert.witness = detail::diagonalize_quadric(red.reduced);
    cert.note = "quadric of rank " + std::to_string(red.m);
    return lift_witness(cert);
  }
  if (red.m == 2) return lift_witness(detail::classify_binary(red.reduced));
  if (red.m == 3) return lift_witness(detail::classify_ternary(red.reduced));
  cert.tag = FormTag::Unknown;
  cert.value = catalecticant_lower_bound(f);
  cert.note = std::to_string(red.m) + " essential variables";
  return cert;
}

/// Pseudo-random member of a normal-form family in three variables.
inline Poly normal_form_sample(FormTag tag, int d, std::uint64_t seed) {
  std::size_t k = 0;
  int min_degree = 1;
  switch (tag) {
    case FormTag::Power: k = 1; break;
    case FormTag::Sum2: k = 2; min_degree = 2; break;
    case FormTag::Tangent: k = 2; min_degree = 3; break;
    case FormTag::Sum3: k = 3; min_degree = 2; break;
    case FormTag::Sum1Tangent:
    case FormTag::Bwr3Local: k = 3; min_degree = 3; break;
    default: fail(ErrorKind::InvalidFamily, std::string(to_string(tag)) + " is not a normal-form family");
  }
  if (d < min_degree)
    fail(ErrorKind::InvalidFamily, std::string(to_string(tag)) + " needs degree at least " + std::to_string(min_degree));
  const std::size_t n = 3;
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(tag) * 131 + static_cast<std::uint64_t>(d));
  std::vector<LinForm> l;
  for (;;) {
    l.clear();
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < k; ++i) {
      Vector c(n);
      for (auto& x : c) x = Scalar(static_cast<int>(rng() % 7) - 3);
      rows.push_back(c);
      l.emplace_back(c);
    }
    if (exact_rank(Matrix::from_rows(rows, n)) == k) break;
  }
  NormalFormWitness w{{}, l};
  switch (tag) {
    case FormTag::Power:
    case FormTag::Tangent: w.coeffs = {Scalar(1)}; break;
    case FormTag::Sum2: w.coeffs = {Scalar(1), Scalar(1)}; break;
    case FormTag::Sum3: w.coeffs = {Scalar(1), Scalar(1), Scalar(1)}; break;
    default: w.coeffs = {Scalar(1), Scalar(1)}; break;
  }
  return normal_form_polynomial(tag, d, w);
}

}  // namespace waring

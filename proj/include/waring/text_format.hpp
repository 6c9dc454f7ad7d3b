#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "waring/border.hpp"
#include "waring/gad.hpp"
#include "waring/synthesis.hpp"

// Text formats. Every file starts with a header line
//   poly   n=<nvars> d=<degree> N=<conductor>
//   border n=.. d=.. N=.. r=<summands>
//   gad    n=.. d=.. N=.. m=<parts>
//   waring n=.. d=.. N=.. r=<summands>
// followed by body lines; '#' starts a comment, blank lines are ignored.
// Polynomial terms:   <scalar> ; <e1> ... <en>
// Border summands:    weight=<eps-expr> ; <eps-expr> ... <eps-expr>
// Waring summands:    weight=<scalar> ; <scalar> ... <scalar>
// GAD parts:          a line of n scalars (l_k), a line holding r_k, then g_k
//                     as a nested poly block whose terms run until the next
//                     line without ';'.
// Scalars are rationals p/q and zeta(M)^k (M dividing N) combined with + - * / ^
// and parentheses; eps-expressions may also use the reserved symbol e.

namespace waring {

namespace detail {

struct SourceLine {
  int number;
  std::string text;
};

[[noreturn]] inline void parse_fail(int line, std::size_t column, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column + 1) + ": " + msg);
}

class LineReader {
 public:
  explicit LineReader(std::string_view text) {
    std::size_t start = 0;
    int number = 1;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string line(text.substr(start, end - start));
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) lines_.push_back({number, std::move(line)});
      start = end + 1;
      ++number;
    }
    last_line_ = number - 1;
  }

  bool done() const { return pos_ >= lines_.size(); }
  const SourceLine& peek() const { return lines_[pos_]; }
  const SourceLine& next(const char* what) {
    if (done()) parse_fail(last_line_, 0, std::string("unexpected end of input, expected ") + what);
    return lines_[pos_++];
  }

 private:
  std::vector<SourceLine> lines_;
  std::size_t pos_ = 0;
  int last_line_ = 1;
};

/// Whitespace-separated tokens with their starting columns.
inline std::vector<std::pair<std::string, std::size_t>> tokens_of(const std::string& s, std::size_t from = 0,
                                                                  std::size_t to = std::string::npos) {
  std::vector<std::pair<std::string, std::size_t>> out;
  to = std::min(to, s.size());
  std::size_t i = from;
  while (i < to) {
    while (i < to && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= to) break;
    std::size_t j = i;
    while (j < to && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.emplace_back(s.substr(i, j - i), i);
    i = j;
  }
  return out;
}

class ExprParser {
 public:
  ExprParser(std::string_view text, int line, std::size_t column, FieldContext ctx, bool allow_eps)
      : s_(text), line_(line), col0_(column), ctx_(std::move(ctx)), allow_eps_(allow_eps) {}

  EpsScalar parse() {
    skip();
    if (at_end()) error("empty expression");
    EpsScalar v = expr();
    skip();
    if (!at_end()) error(std::string("unexpected '") + s_[i_] + "'");
    return v;
  }

 private:
  EpsScalar expr() {
    EpsScalar v = term();
    for (;;) {
      skip();
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  EpsScalar term() {
    EpsScalar v = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        v = v * unary();
      } else if (peek('/')) {
        const std::size_t at = i_++;
        EpsScalar d = unary();
        if (d.is_zero()) error_at(at, "division by zero");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  EpsScalar unary() {
    skip();
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  EpsScalar power() {
    EpsScalar b = atom();
    skip();
    if (!eat('^')) return b;
    skip();
    bool negative = eat('-');
    skip();
    const std::size_t at = i_;
    long k = integer("exponent");
    if (k > 100000) error_at(at, "exponent too large");
    if (negative && b.is_zero()) error_at(at, "division by zero");
    return b.pow(negative ? -static_cast<int>(k) : static_cast<int>(k));
  }

  EpsScalar atom() {
    skip();
    if (at_end()) error("expected a number, zeta(M), e or '('");
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class z;
      const std::size_t start = i_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      z.set_str(std::string(s_.substr(start, i_ - start)), 10);
      return EpsScalar(Scalar(Rational(z)));
    }
    if (eat('(')) {
      EpsScalar v = expr();
      skip();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (s_.substr(i_, 4) == "zeta") {
      const std::size_t at = i_;
      i_ += 4;
      skip();
      if (!eat('(')) error("expected '(' after zeta");
      skip();
      const std::size_t mat = i_;
      long m = integer("zeta order");
      skip();
      if (!eat(')')) error("expected ')'");
      if (m < 1) error_at(mat, "zeta order must be positive");
      const auto n = static_cast<long>(ctx_->conductor());
      if (n % m != 0)
        fail(ErrorKind::ContextMismatch, "line " + std::to_string(line_) + ", column " + std::to_string(col0_ + at + 1) +
                                             ": zeta(" + std::to_string(m) + ") is not in Q(zeta_" + std::to_string(n) +
                                             "); raise N in the header");
      return EpsScalar(Scalar::zeta_power(ctx_, n / m));
    }
    if (c == 'e' && (i_ + 1 >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[i_ + 1])))) {
      if (!allow_eps_) error("the symbol e is only allowed in eps-expressions");
      ++i_;
      return EpsScalar::eps();
    }
    error(std::string("unexpected '") + c + "'");
  }

  long integer(const char* what) {
    const std::size_t start = i_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) error(std::string("expected ") + what);
    if (i_ - start > 9) error_at(start, std::string(what) + " too large");
    return std::stol(std::string(s_.substr(start, i_ - start)));
  }

  bool at_end() const { return i_ >= s_.size(); }
  bool peek(char c) const { return !at_end() && s_[i_] == c; }
  bool eat(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  [[noreturn]] void error(const std::string& msg) const { error_at(i_, msg); }
  [[noreturn]] void error_at(std::size_t at, const std::string& msg) const { parse_fail(line_, col0_ + at, msg); }

  std::string_view s_;
  std::size_t i_ = 0;
  int line_;
  std::size_t col0_;
  FieldContext ctx_;
  bool allow_eps_;
};

inline Scalar parse_scalar_at(std::string_view text, int line, std::size_t column, const FieldContext& ctx) {
  EpsScalar v = ExprParser(text, line, column, ctx, false).parse();
  return v.is_zero() ? Scalar(0).in(ctx) : v.num()[0].in(ctx);
}

inline EpsScalar parse_eps_at(std::string_view text, int line, std::size_t column, const FieldContext& ctx) {
  return ExprParser(text, line, column, ctx, true).parse();
}

struct Header {
  std::string kind;
  std::map<std::string, long> fields;
  FieldContext ctx;
  int line;
};

inline Header read_header(LineReader& in, std::string_view kind, const std::vector<std::string>& keys,
                          std::uint64_t max_conductor) {
  const SourceLine& line = in.next("a header line");
  auto toks = tokens_of(line.text);
  if (toks.empty() || toks[0].first != kind)
    parse_fail(line.number, toks.empty() ? 0 : toks[0].second, "expected a '" + std::string(kind) + "' header");
  Header h{std::string(kind), {}, nullptr, line.number};
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const auto& [tok, col] = toks[i];
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == tok.size()) parse_fail(line.number, col, "expected key=value");
    std::string key = tok.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) parse_fail(line.number, col, "unknown header field '" + key + "'");
    if (h.fields.count(key)) parse_fail(line.number, col, "duplicate header field '" + key + "'");
    const std::string value = tok.substr(eq + 1);
    if (value.size() > 9 || value.find_first_not_of("0123456789") != std::string::npos)
      parse_fail(line.number, col + eq + 1, "expected a nonnegative integer");
    h.fields[key] = std::stol(value);
  }
  for (const auto& k : keys)
    if (!h.fields.count(k)) parse_fail(line.number, line.text.size(), "missing header field '" + k + "'");
  if (h.fields["n"] < 1) parse_fail(line.number, 0, "n must be at least 1");
  if (h.fields["N"] < 1) parse_fail(line.number, 0, "N must be at least 1");
  check_conductor(static_cast<std::uint64_t>(h.fields["N"]), max_conductor);
  h.ctx = make_context(static_cast<std::uint64_t>(h.fields["N"]));
  return h;
}

inline bool is_body_line(const LineReader& in) { return !in.done() && in.peek().text.find(';') != std::string::npos; }

inline void expect_count(const SourceLine& line, std::size_t got, long want, const char* what) {
  if (static_cast<long>(got) != want)
    parse_fail(line.number, 0,
               "expected " + std::to_string(want) + " " + what + ", found " + std::to_string(got));
}

inline Poly read_poly(LineReader& in, std::uint64_t max_conductor) {
  Header h = read_header(in, "poly", {"n", "d", "N"}, max_conductor);
  const auto n = static_cast<std::size_t>(h.fields["n"]);
  const int d = static_cast<int>(h.fields["d"]);
  Poly f(n, d);
  while (is_body_line(in)) {
    const SourceLine& line = in.next("a term");
    const std::size_t semi = line.text.find(';');
    Scalar c = parse_scalar_at(std::string_view(line.text).substr(0, semi), line.number, 0, h.ctx);
    auto toks = tokens_of(line.text, semi + 1);
    if (toks.size() != n)
      parse_fail(line.number, toks.size() > n ? toks[n].second : line.text.size(),
                 "expected " + std::to_string(n) + " exponents, found " + std::to_string(toks.size()));
    Monomial m(n);
    int total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& [tok, col] = toks[i];
      if (tok.size() > 6 || tok.find_first_not_of("0123456789") != std::string::npos)
        parse_fail(line.number, col, "exponent must be a nonnegative integer");
      m[i] = std::stoi(tok);
      total += m[i];
    }
    if (total != d) parse_fail(line.number, toks[0].second, "exponents sum to " + std::to_string(total) + ", not d=" + std::to_string(d));
    f.add_term(m, c);
  }
  return f;
}

/// Splits "weight=<expr> ; <a1> ... <an>" and checks the coefficient count.
struct SummandLine {
  std::string_view weight;
  std::size_t weight_col;
  std::vector<std::pair<std::string, std::size_t>> coeffs;
};

inline SummandLine split_summand(const SourceLine& line, std::size_t n) {
  const std::string& t = line.text;
  std::size_t start = t.find_first_not_of(" \t");
  if (t.compare(start, 7, "weight=") != 0) parse_fail(line.number, start, "expected 'weight='");
  const std::size_t semi = t.find(';');
  SummandLine s{std::string_view(t).substr(start + 7, semi - start - 7), start + 7, tokens_of(t, semi + 1)};
  if (s.coeffs.size() != n)
    parse_fail(line.number, s.coeffs.size() > n ? s.coeffs[n].second : t.size(),
               "expected " + std::to_string(n) + " form coefficients, found " + std::to_string(s.coeffs.size()));
  return s;
}

inline void expect_end(const LineReader& in) {
  if (!in.done()) parse_fail(in.peek().number, 0, "unexpected trailing line");
}

}  // namespace detail

inline Poly parse_poly(std::string_view text, std::uint64_t max_conductor = default_max_conductor) {
  detail::LineReader in(text);
  Poly f = detail::read_poly(in, max_conductor);
  detail::expect_end(in);
  return f;
}

inline BorderDecomposition parse_border(std::string_view text, std::uint64_t max_conductor = default_max_conductor) {
  detail::LineReader in(text);
  auto h = detail::read_header(in, "border", {"n", "d", "N", "r"}, max_conductor);
  const auto n = static_cast<std::size_t>(h.fields["n"]);
  BorderDecomposition b{n, static_cast<int>(h.fields["d"]), {}};
  while (!in.done()) {
    const auto& line = in.next("a summand");
    auto s = detail::split_summand(line, n);
    BorderSummand bs{detail::parse_eps_at(s.weight, line.number, s.weight_col, h.ctx), {}};
    for (const auto& [tok, col] : s.coeffs) bs.form.push_back(detail::parse_eps_at(tok, line.number, col, h.ctx));
    b.summands.push_back(std::move(bs));
  }
  if (static_cast<long>(b.size()) != h.fields["r"])
    detail::parse_fail(h.line, 0, "header says r=" + std::to_string(h.fields["r"]) + " but found " +
                                           std::to_string(b.size()) + " summands");
  return b;
}

inline WaringDecomposition parse_waring(std::string_view text, std::uint64_t max_conductor = default_max_conductor) {
  detail::LineReader in(text);
  auto h = detail::read_header(in, "waring", {"n", "d", "N", "r"}, max_conductor);
  const auto n = static_cast<std::size_t>(h.fields["n"]);
  WaringDecomposition w{n, static_cast<int>(h.fields["d"]), {}};
  while (!in.done()) {
    const auto& line = in.next("a summand");
    auto s = detail::split_summand(line, n);
    WaringSummand ws{detail::parse_scalar_at(s.weight, line.number, s.weight_col, h.ctx), LinForm(Vector{})};
    for (const auto& [tok, col] : s.coeffs) ws.form.coeffs.push_back(detail::parse_scalar_at(tok, line.number, col, h.ctx));
    w.summands.push_back(std::move(ws));
  }
  if (static_cast<long>(w.size()) != h.fields["r"])
    detail::parse_fail(h.line, 0, "header says r=" + std::to_string(h.fields["r"]) + " but found " + std::to_string(w.size()) +
                                 " summands");
  return w;
}

inline GAD parse_gad(std::string_view text, std::uint64_t max_conductor = default_max_conductor) {
  detail::LineReader in(text);
  auto h = detail::read_header(in, "gad", {"n", "d", "N", "m"}, max_conductor);
  const auto n = static_cast<std::size_t>(h.fields["n"]);
  GAD g{n, static_cast<int>(h.fields["d"]), {}};
  for (long k = 0; k < h.fields["m"]; ++k) {
    const auto& fl = in.next("a linear form line");
    auto toks = detail::tokens_of(fl.text);
    detail::expect_count(fl, toks.size(), static_cast<long>(n), "form coefficients");
    GadPart part{LinForm(Vector{}), 1, Poly()};
    for (const auto& [tok, col] : toks) part.l.coeffs.push_back(detail::parse_scalar_at(tok, fl.number, col, h.ctx));
    const auto& rl = in.next("an r_k line");
    auto rt = detail::tokens_of(rl.text);
    if (rt.size() != 1 || rt[0].first.size() > 6 || rt[0].first.find_first_not_of("0123456789") != std::string::npos)
      detail::parse_fail(rl.number, 0, "expected a positive integer r_k");
    part.r = std::stoi(rt[0].first);
    if (part.r < 1 || part.r > g.degree + 1) detail::parse_fail(rl.number, rt[0].second, "r_k out of range");
    const int poly_line = in.done() ? rl.number : in.peek().number;
    Poly gk = detail::read_poly(in, max_conductor);
    if (gk.nvars() != n || gk.degree() != part.r - 1)
      detail::parse_fail(poly_line, 0, "g_k must have n=" + std::to_string(n) + " and d=r_k-1=" + std::to_string(part.r - 1));
    part.g = gk.embedded(h.ctx);
    g.parts.push_back(std::move(part));
  }
  detail::expect_end(in);
  return g;
}

namespace detail {

inline std::string header_line(const char* kind, std::size_t n, int d, std::uint64_t N) {
  return std::string(kind) + " n=" + std::to_string(n) + " d=" + std::to_string(d) + " N=" + std::to_string(N);
}

inline std::string scalar_in(const Scalar& x, const FieldContext& ctx) { return to_string(x.in(ctx)); }

inline EpsScalar eps_in(const EpsScalar& x, const FieldContext& ctx) {
  auto lift = [&](const EpsPoly& p) {
    std::vector<Scalar> c = p.coeffs();
    for (auto& v : c) v = v.in(ctx);
    return EpsPoly(std::move(c));
  };
  return EpsScalar(lift(x.num()), lift(x.den()));
}

inline void write_poly_body(std::ostream& os, const Poly& f, const FieldContext& ctx) {
  for (const auto& [m, c] : f.terms()) {
    os << scalar_in(c, ctx) << " ;";
    for (int e : m) os << ' ' << e;
    os << '\n';
  }
}

}  // namespace detail

inline std::string format_poly(const Poly& f) {
  std::ostringstream os;
  const auto N = f.conductor();
  os << detail::header_line("poly", f.nvars(), f.degree(), N) << '\n';
  detail::write_poly_body(os, f, make_context(N));
  return os.str();
}

inline std::string format_border(const BorderDecomposition& b) {
  std::ostringstream os;
  const auto N = b.conductor();
  auto ctx = make_context(N);
  os << detail::header_line("border", b.nvars, b.degree, N) << " r=" << b.size() << '\n';
  for (const auto& s : b.summands) {
    os << "weight=" << to_string(detail::eps_in(s.weight, ctx)) << " ;";
    for (const auto& c : s.form) os << ' ' << to_string(detail::eps_in(c, ctx));
    os << '\n';
  }
  return os.str();
}

inline std::string format_waring(const WaringDecomposition& w) {
  std::ostringstream os;
  const auto N = w.conductor();
  auto ctx = make_context(N);
  os << detail::header_line("waring", w.nvars, w.degree, N) << " r=" << w.size() << '\n';
  for (const auto& s : w.summands) {
    os << "weight=" << detail::scalar_in(s.weight, ctx) << " ;";
    for (const auto& c : s.form.coeffs) os << ' ' << detail::scalar_in(c, ctx);
    os << '\n';
  }
  return os.str();
}

inline std::string format_gad(const GAD& g) {
  std::ostringstream os;
  const auto N = g.conductor();
  auto ctx = make_context(N);
  os << detail::header_line("gad", g.nvars, g.degree, N) << " m=" << g.parts.size() << '\n';
  for (const auto& p : g.parts) {
    for (std::size_t i = 0; i < p.l.coeffs.size(); ++i) os << (i ? " " : "") << detail::scalar_in(p.l.coeffs[i], ctx);
    os << '\n' << p.r << '\n';
    os << detail::header_line("poly", g.nvars, p.r - 1, N) << '\n';
    detail::write_poly_body(os, p.g, ctx);
  }
  return os.str();
}

// JSON mirrors of the text formats; scalars stay canonical literals.

inline nlohmann::ordered_json poly_json(const Poly& f) {
  const auto N = f.conductor();
  auto ctx = make_context(N);
  nlohmann::ordered_json j{{"kind", "poly"}, {"n", f.nvars()}, {"d", f.degree()}, {"N", N}};
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : f.terms()) j["terms"].push_back({{"coeff", detail::scalar_in(c, ctx)}, {"exponents", m}});
  return j;
}

inline nlohmann::ordered_json border_json(const BorderDecomposition& b) {
  const auto N = b.conductor();
  auto ctx = make_context(N);
  nlohmann::ordered_json j{{"kind", "border"}, {"n", b.nvars}, {"d", b.degree}, {"N", N}, {"r", b.size()}};
  j["summands"] = nlohmann::ordered_json::array();
  for (const auto& s : b.summands) {
    std::vector<std::string> form;
    for (const auto& c : s.form) form.push_back(to_string(detail::eps_in(c, ctx)));
    j["summands"].push_back({{"weight", to_string(detail::eps_in(s.weight, ctx))}, {"form", form}});
  }
  return j;
}

inline nlohmann::ordered_json waring_json(const WaringDecomposition& w) {
  const auto N = w.conductor();
  auto ctx = make_context(N);
  nlohmann::ordered_json j{{"kind", "waring"}, {"n", w.nvars}, {"d", w.degree}, {"N", N}, {"r", w.size()}};
  j["summands"] = nlohmann::ordered_json::array();
  for (const auto& s : w.summands) {
    std::vector<std::string> form;
    for (const auto& c : s.form.coeffs) form.push_back(detail::scalar_in(c, ctx));
    j["summands"].push_back({{"weight", detail::scalar_in(s.weight, ctx)}, {"form", form}});
  }
  return j;
}

inline nlohmann::ordered_json gad_json(const GAD& g) {
  const auto N = g.conductor();
  auto ctx = make_context(N);
  nlohmann::ordered_json j{{"kind", "gad"}, {"n", g.nvars}, {"d", g.degree}, {"N", N}, {"m", g.parts.size()}};
  j["parts"] = nlohmann::ordered_json::array();
  for (const auto& p : g.parts) {
    std::vector<std::string> form;
    for (const auto& c : p.l.coeffs) form.push_back(detail::scalar_in(c, ctx));
    nlohmann::ordered_json gj = poly_json(p.g.embedded(ctx));
    gj["N"] = N;
    j["parts"].push_back({{"form", form}, {"r", p.r}, {"g", gj}});
  }
  return j;
}

}  // namespace waring

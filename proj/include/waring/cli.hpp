#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "waring/apolarity.hpp"
#include "waring/fixtures.hpp"
#include "waring/oracles.hpp"
#include "waring/synthesis.hpp"
#include "waring/text_format.hpp"

namespace waring::cli {

enum ExitCode { Ok = 0, VerificationFailed = 1, UsageError = 2, ComputationError = 3 };

inline int exit_code_for(ErrorKind k) {
  return (k == ErrorKind::Usage || k == ErrorKind::ParseError || k == ErrorKind::InvalidFamily) ? UsageError
                                                                                                   : ComputationError;
}

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::Usage, "cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

inline nlohmann::ordered_json bounds_json(const BoundReport& b) {
  return {{"r", b.r},
          {"d", b.d},
          {"n", b.n},
          {"binom_bound", b.binom_bound.get_str()},
          {"bt_bound", b.bt_bound.get_str()},
          {"fp_bound", b.fp_bound.get_str()},
          {"generic_rank", b.generic_rank.get_str()}};
}

inline std::string bounds_text(const BoundReport& b, const char* prefix) {
  std::ostringstream os;
  os << prefix << "r " << b.r << '\n'
     << prefix << "d " << b.d << '\n'
     << prefix << "n " << b.n << '\n'
     << prefix << "binom_bound " << b.binom_bound << '\n'
     << prefix << "bt_bound " << b.bt_bound << '\n'
     << prefix << "fp_bound " << b.fp_bound << '\n'
     << prefix << "generic_rank " << b.generic_rank << '\n';
  return os.str();
}

inline std::vector<std::string> strings(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(to_string(s));
  return out;
}

inline nlohmann::ordered_json certificate_json(const RankCertificate& c) {
  nlohmann::ordered_json j{{"tag", std::string(to_string(c.tag))},
                           {"kind", std::string(to_string(c.kind))},
                           {"value", c.value},
                           {"note", c.note}};
  if (c.witness) {
    nlohmann::ordered_json forms = nlohmann::ordered_json::array();
    for (const auto& l : c.witness->forms) forms.push_back(strings(l.coeffs));
    j["witness"] = {{"coeffs", strings(c.witness->coeffs)}, {"forms", forms}};
  }
  return j;
}

inline std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + v[i];
  return out;
}

inline std::string certificate_text(const RankCertificate& c) {
  std::ostringstream os;
  os << "tag " << to_string(c.tag) << '\n' << "kind " << to_string(c.kind) << '\n' << "value " << c.value << '\n';
  if (!c.note.empty()) os << "note " << c.note << '\n';
  if (c.witness) {
    os << "coeffs " << join(strings(c.witness->coeffs)) << '\n';
    for (const auto& l : c.witness->forms) os << "form " << join(strings(l.coeffs)) << '\n';
  }
  return os.str();
}

inline void verdict(bool ok, const std::string& reason, std::ostream& out, std::ostream& err, int& code) {
  if (ok) {
    out << "verified\n";
    code = Ok;
  } else {
    err << "not verified: " << reason << '\n';
    code = VerificationFailed;
  }
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact debordering of border Waring decompositions", "waring"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t max_conductor = default_max_conductor;
  bool json = false;
  app.add_option("--max-conductor", max_conductor, "Reject computations needing zeta_N with N above this")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", json, "Machine-readable output");

  std::string file, file2;
  auto* deb = app.add_subcommand("deborder", "Border decomposition to an exact Waring decomposition");
  deb->add_option("border", file, "Border file (default: stdin)");
  auto* gad = app.add_subcommand("gad", "Generalized additive decomposition of the limit");
  gad->add_option("border", file, "Border file (default: stdin)");
  auto* vb = app.add_subcommand("verify-border", "Check that a border decomposition has limit f");
  vb->add_option("poly", file, "Polynomial file")->required();
  vb->add_option("border", file2, "Border file")->required();
  auto* vw = app.add_subcommand("verify-waring", "Check a Waring decomposition of f");
  vw->add_option("poly", file, "Polynomial file")->required();
  vw->add_option("waring", file2, "Waring file")->required();
  auto* vg = app.add_subcommand("verify-gad", "Check a generalized additive decomposition of f");
  vg->add_option("poly", file, "Polynomial file")->required();
  vg->add_option("gad", file2, "GAD file")->required();
  int br = 0, bd = 0, bn = 0;
  auto* rb = app.add_subcommand("rank-bounds", "Upper bounds on the Waring rank from a border rank");
  rb->add_option("--r", br, "Border rank")->required()->check(CLI::PositiveNumber);
  rb->add_option("--d", bd, "Degree")->required()->check(CLI::PositiveNumber);
  rb->add_option("--n", bn, "Number of variables")->required()->check(CLI::PositiveNumber);
  auto* cl = app.add_subcommand("classify", "Border rank classification and rank certificates");
  cl->add_option("poly", file, "Polynomial file (default: stdin)");
  auto* hi = app.add_subcommand("hilbert", "Hilbert function of the apolar algebra");
  hi->add_option("poly", file, "Polynomial file (default: stdin)");
  std::string family, tag_name;
  int fd = 0;
  std::uint64_t seed = 0;
  auto* fx = app.add_subcommand("fixtures", "Write a fixture family");
  fx->add_option("family", family, "intro-tangent, eq1-fd, eq2-wild or normal-form")
      ->required()
      ->check(CLI::IsMember({"intro-tangent", "eq1-fd", "eq2-wild", "normal-form"}));
  auto* fx_d = fx->add_option("--d", fd, "Degree");
  fx->add_option("--tag", tag_name, "Normal-form tag");
  fx->add_option("--seed", seed, "Normal-form seed");

  std::vector<const char*> argv{"waring"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? Ok : UsageError;
  }

  int code = Ok;
  try {
    if (deb->parsed()) {
      BorderDecomposition b = parse_border(detail::slurp(file, in), max_conductor);
      DeborderResult r = deborder_detailed(b, max_conductor);
      BoundReport rep = bounds(std::max<int>(1, static_cast<int>(b.size())), std::max(1, b.degree), static_cast<int>(b.nvars));
      const char* method = r.via_gad ? "gad" : "essential-variables";
      if (json) {
        out << nlohmann::ordered_json{{"waring", waring_json(r.waring)}, {"method", method}, {"bounds", detail::bounds_json(rep)}}
                   .dump(2)
            << '\n';
      } else {
        out << "# method " << method << '\n' << detail::bounds_text(rep, "# ") << format_waring(r.waring);
      }
    } else if (gad->parsed()) {
      BorderDecomposition b = parse_border(detail::slurp(file, in), max_conductor);
      GAD g = extract_gad(b);
      if (GadCheck c = verify_gad(g, limit_of_decomposition(b)); !c) fail(ErrorKind::LocalStructureViolation, c.reason);
      out << (json ? gad_json(g).dump(2) + "\n" : format_gad(g));
    } else if (vb->parsed()) {
      Poly f = parse_poly(detail::slurp(file, in), max_conductor);
      BorderDecomposition b = parse_border(detail::slurp(file2, in), max_conductor);
      if (b.nvars != f.nvars() || b.degree != f.degree()) {
        detail::verdict(false, "variable count or degree differs", out, err, code);
      } else {
        try {
          detail::verdict(limit_of_decomposition(b) == f, "limit differs from the polynomial", out, err, code);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::LimitDoesNotExist) throw;
          detail::verdict(false, e.what(), out, err, code);
        }
      }
    } else if (vw->parsed()) {
      Poly f = parse_poly(detail::slurp(file, in), max_conductor);
      WaringDecomposition w = parse_waring(detail::slurp(file2, in), max_conductor);
      detail::verdict(verify_waring(w, f), "sum of powers differs from the polynomial", out, err, code);
    } else if (vg->parsed()) {
      Poly f = parse_poly(detail::slurp(file, in), max_conductor);
      GAD g = parse_gad(detail::slurp(file2, in), max_conductor);
      GadCheck c = verify_gad(g, f);
      detail::verdict(c.ok, c.reason, out, err, code);
    } else if (rb->parsed()) {
      BoundReport rep = bounds(br, bd, bn);
      out << (json ? detail::bounds_json(rep).dump(2) + "\n" : detail::bounds_text(rep, ""));
    } else if (cl->parsed()) {
      Poly f = parse_poly(detail::slurp(file, in), max_conductor);
      RankCertificate c = classify_small_border(f);
      if (json) {
        auto j = detail::certificate_json(c);
        j["catalecticant_lower_bound"] = catalecticant_lower_bound(f);
        out << j.dump(2) << '\n';
      } else {
        out << detail::certificate_text(c) << "catalecticant_lower_bound " << catalecticant_lower_bound(f) << '\n';
      }
    } else if (hi->parsed()) {
      HilbertProfile h = hilbert_function(parse_poly(detail::slurp(file, in), max_conductor));
      if (json) {
        out << nlohmann::ordered_json(h.values).dump() << '\n';
      } else {
        for (std::size_t i = 0; i < h.values.size(); ++i) out << (i ? " " : "") << h.values[i];
        out << '\n';
      }
    } else if (fx->parsed()) {
      const bool needs_d = family != "eq2-wild";
      if (needs_d && fx_d->count() == 0) fail(ErrorKind::Usage, family + " needs --d");
      if (family == "normal-form") {
        auto tag = parse_form_tag(tag_name);
        if (!tag) fail(ErrorKind::Usage, "unknown tag '" + tag_name + "'");
        Poly f = normal_form_sample(*tag, fd, seed);
        out << (json ? poly_json(f).dump(2) + "\n" : format_poly(f));
      } else {
        BorderDecomposition b = family == "intro-tangent" ? intro_tangent(fd) : family == "eq1-fd" ? eq1_fd(fd) : eq2_wild();
        out << (json ? border_json(b).dump(2) + "\n" : format_border(b));
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return code;
}

}  // namespace waring::cli

// Command-line front end. dispatch() parses argv, validates every flag
// before computing, and writes JSON (or key: value text with --text).
// Exit codes: 0 success, 1 usage error, 2 internal consistency failure.
#ifndef MPART_CLI_HPP
#define MPART_CLI_HPP

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mpart/analytic.hpp"
#include "mpart/audit.hpp"
#include "mpart/barnes.hpp"
#include "mpart/density.hpp"
#include "mpart/oracle.hpp"
#include "mpart/quasipoly.hpp"
#include "mpart/waves.hpp"

namespace mpart::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInconsistent = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<std::string> split_list(const std::string& text, const std::string& flag) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw UsageError(flag + ": malformed list '" + text + "'");
    out.push_back(item);
  }
  if (out.empty() || text.back() == ',') throw UsageError(flag + ": malformed list '" + text + "'");
  return out;
}

inline std::uint64_t parse_uint(const std::string& text, const std::string& flag) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(flag + ": expected a non-negative integer, got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::exception&) {
    throw UsageError(flag + ": integer out of range '" + text + "'");
  }
}

inline std::vector<std::uint64_t> parse_parts(const std::string& text) {
  std::vector<std::uint64_t> out;
  for (const auto& item : split_list(text, "--a")) {
    const auto v = parse_uint(item, "--a");
    if (v < 1) throw UsageError("--a: every part must be >= 1");
    out.push_back(v);
  }
  return out;
}

inline Real parse_real(const std::string& text, const std::string& flag) {
  std::size_t used = 0;
  double probe = 0;
  try {
    probe = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": expected a real number, got '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(probe)) throw UsageError(flag + ": expected a real number, got '" + text + "'");
  return Real(text);
}

/// Flags shared by every subcommand that takes a partition spec.
struct SpecFlags {
  std::string a;
  std::string k;

  void attach(CLI::App* sub) {
    sub->add_option("--a", a, "parts, comma separated (e.g. 1,2)")->required();
    sub->add_option("--k", k, "multiplicity k >= 1")->required();
  }

  PartitionSpec build() const {
    auto parts = parse_parts(a);
    const auto kk = parse_uint(k, "--k");
    if (kk < 1) throw UsageError("--k: must be >= 1");
    try {
      return PartitionSpec(std::move(parts), kk);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--a: ") + e.what());
    }
  }
};

inline void write_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) write_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); })) {
      out << prefix << ":";
      for (const auto& x : j) out << " " << (x.is_string() ? x.get<std::string>() : x.dump());
      out << "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) write_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

inline Json quasi_json(const QuasiPolynomial& qp) {
  Json rows = Json::array();
  for (std::uint64_t s = 0; s < qp.period(); ++s) rows.push_back(to_json(qp.row(s)));
  return Json{{"period", qp.period()}, {"degree", qp.degree()}, {"rows", rows}};
}

inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted k-multipartition counts, quasi-polynomials, waves and formula audits", "mpart"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false;
  app.add_flag("--text", text, "plain key: value output instead of JSON");

  SpecFlags spec_count, spec_coeffs, spec_poly, spec_waves, spec_bb, spec_delta, spec_density, spec_zeta, spec_audit;

  auto* count = app.add_subcommand("count", "p_{a,k}(n) from the series oracle, cross-checked by the closed form");
  spec_count.attach(count);
  std::string count_n, series_arg;
  count->add_option("--n", count_n, "argument n");
  count->add_option("--series", series_arg, "also print p(0..N_MAX)");

  auto* coeffs = app.add_subcommand("coeffs", "coefficient table d_m(s) of the quasi-polynomial");
  spec_coeffs.attach(coeffs);
  bool literal = false;
  coeffs->add_flag("--literal", literal, "use the literal inner binomial C(k,m)");

  auto* poly = app.add_subcommand("polypart", "polynomial part (wave W_1)");
  spec_poly.attach(poly);
  std::string method = "both";
  poly->add_option("--method", method, "teo4 | teo5 | both")->check(CLI::IsMember({"teo4", "teo5", "both"}));

  auto* waves = app.add_subcommand("waves", "Sylvester wave decomposition");
  spec_waves.attach(waves);
  std::string n_check;
  waves->add_option("--n-check", n_check, "check the wave sum against the oracle for n < this (default 2D)");

  auto* bb = app.add_subcommand("bbnum", "Bernoulli-Barnes number B_j(a[k]), direct and grouped");
  spec_bb.attach(bb);
  std::string bb_j;
  bb->add_option("--j", bb_j, "index j")->required();

  auto* delta = app.add_subcommand("delta", "rkD x rkD Bernoulli determinant");
  spec_delta.attach(delta);

  auto* density = app.add_subcommand("density", "density of n <= N with p(n) != 0 mod m");
  spec_density.attach(density);
  std::string mod, horizon;
  density->add_option("--mod", mod, "modulus m >= 2")->required();
  density->add_option("--N", horizon, "horizon N")->required();

  auto* zeta = app.add_subcommand("zeta", "k-fold Barnes zeta product against count-weighted series");
  spec_zeta.attach(zeta);
  std::string zs, zw, zcut = "2000", ztol = "1e-6";
  zeta->add_option("--s", zs, "real s > r + 1")->required();
  zeta->add_option("--w", zw, "k positive shifts, comma separated")->required();
  zeta->add_option("--cutoff", zcut, "series cutoff");
  zeta->add_option("--tol", ztol, "comparison tolerance");

  auto* audit = app.add_subcommand("audit", "run the full formula audit registry");
  spec_audit.attach(audit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Json result;
  try {
    if (*count) {
      const auto spec = spec_count.build();
      std::optional<std::uint64_t> n, series;
      if (!count_n.empty()) n = parse_uint(count_n, "--n");
      if (!series_arg.empty()) series = parse_uint(series_arg, "--series");
      if (!n && !series) throw UsageError("count: give --n and/or --series");
      const auto table = count_series(spec, std::max(n.value_or(0), series.value_or(0)));
      result = Json::object();
      if (n) {
        const auto closed = count_closed_form(spec, *n);
        if (closed != table.values[*n])
          throw ConsistencyError("closed form " + to_string(closed) + " differs from oracle " +
                                 to_string(table.values[*n]));
        result["value"] = to_string(table.values[*n]);
      }
      if (series) {
        Json vals = Json::array();
        for (std::uint64_t i = 0; i <= *series; ++i) vals.push_back(to_string(table.values[i]));
        result["series"] = vals;
      }
    } else if (*coeffs) {
      const auto spec = spec_coeffs.build();
      const auto qp =
          build_quasipolynomial(spec, literal ? QuasiMethod::closed_form_literal : QuasiMethod::closed_form);
      result = quasi_json(qp);
      result["mode"] = literal ? "literal" : "corrected";
    } else if (*poly) {
      const auto spec = spec_poly.build();
      result = Json::object();
      std::optional<Polynomial> box, bern;
      if (method != "teo5") box = polynomial_part_box_sum(spec);
      if (method != "teo4") bern = polynomial_part_bernoulli(spec);
      if (box) result["teo4"] = to_json(*box);
      if (bern) result["teo5"] = to_json(*bern);
      if (box && bern) {
        result["agree"] = *box == *bern;
        if (*box != *bern) {
          out << result.dump() << "\n";
          err << "internal consistency failure: polynomial-part methods disagree\n";
          return kInconsistent;
        }
      }
    } else if (*waves) {
      const auto spec = spec_waves.build();
      const std::uint64_t limit = n_check.empty() ? 2 * spec.D() : parse_uint(n_check, "--n-check");
      const auto ws = decompose_waves(spec);
      const auto table = count_series(spec, limit);
      bool ok = true;
      for (std::uint64_t n = 0; n < limit; ++n) ok &= ws.evaluate_sum(n) == Rational(table.values[n]);
      Json wj = Json::object();
      for (const auto& [j, w] : ws.waves) wj[std::to_string(j)] = quasi_json(w);
      result = Json{{"indices", ws.indices}, {"waves", wj}, {"n_check", limit}, {"sum_matches_oracle", ok}};
      if (!ok) {
        out << result.dump() << "\n";
        err << "internal consistency failure: wave sum differs from oracle\n";
        return kInconsistent;
      }
    } else if (*bb) {
      const auto spec = spec_bb.build();
      const auto j = parse_uint(bb_j, "--j");
      if (j > 100000) throw UsageError("--j: too large");
      const auto direct = bernoulli_barnes(expand_ak(spec), static_cast<unsigned>(j));
      const auto grouped = bernoulli_barnes_grouped(spec, static_cast<unsigned>(j));
      if (direct != grouped) throw ConsistencyError("grouped and direct Bernoulli-Barnes numbers differ");
      result = Json{{"value", to_string(direct)}, {"grouped", to_string(grouped)}, {"agree", true}};
    } else if (*delta) {
      const auto spec = spec_delta.build();
      result = Json{{"dimension", spec.rk() * spec.D()}, {"delta", to_string(delta_determinant(spec))}};
    } else if (*density) {
      const auto spec = spec_density.build();
      const auto m = parse_uint(mod, "--mod");
      if (m < 2) throw UsageError("--mod: must be >= 2");
      const auto N = parse_uint(horizon, "--N");
      const auto d = density_mod(spec, m, N);
      result = Json{{"density", to_string(d.density)},
                    {"bound", to_string(d.bound)},
                    {"violation", d.violation},
                    {"hits", std::to_string(d.hits)},
                    {"N", std::to_string(d.N)},
                    {"mod", std::to_string(d.m)},
                    {"density_over_N", to_string(d.density_over_n)}};
    } else if (*zeta) {
      const auto spec = spec_zeta.build();
      const Real s = parse_real(zs, "--s");
      std::vector<Real> w;
      for (const auto& item : split_list(zw, "--w")) {
        w.push_back(parse_real(item, "--w"));
        if (!(w.back() > 0)) throw UsageError("--w: shifts must be positive");
      }
      if (w.size() != spec.k()) throw UsageError("--w: need exactly k = " + std::to_string(spec.k()) + " shifts");
      if (!(s > Real(spec.r() + 1))) throw UsageError("--s: must exceed r + 1 = " + std::to_string(spec.r() + 1));
      const auto cutoff = parse_uint(zcut, "--cutoff");
      if (cutoff > 200000) throw UsageError("--cutoff: too large");
      const Real tol = parse_real(ztol, "--tol");
      if (!(tol > 0)) throw UsageError("--tol: must be positive");
      const auto chk = zak_product_check(spec, s, w, cutoff, tol);
      result = Json{{"product", to_string(chk.product, 20)},
                    {"series", to_string(chk.corrected, 20)},
                    {"series_verdict", to_string(chk.corrected_verdict)},
                    {"literal_p1", to_string(chk.literal_p1, 20)},
                    {"literal_p1_verdict", to_string(chk.literal_p1_verdict)},
                    {"literal_p2", to_string(chk.literal_p2, 20)},
                    {"literal_p2_verdict", to_string(chk.literal_p2_verdict)}};
    } else if (*audit) {
      result = to_json(run_audit(spec_audit.build()));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const SingularMatrixError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::logic_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  if (text) write_text(result, "", out);
  else out << result.dump() << "\n";
  return kOk;
}

inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return dispatch(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace mpart::cli

#endif  // MPART_CLI_HPP

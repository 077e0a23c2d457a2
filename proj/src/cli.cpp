#include "dklein/cli.hpp"

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dklein/algebra.hpp"
#include "dklein/errors.hpp"
#include "dklein/iso.hpp"
#include "dklein/poisson.hpp"
#include "dklein/poly.hpp"
#include "dklein/text.hpp"
#include "dklein/verify.hpp"

namespace dklein {
namespace {

using nlohmann::ordered_json;

struct Opts {
  std::string algebra;
  std::string q_text, p_text, gamma_text = "0";
  std::string q2_text, p2_text, gamma2_text = "0";
  std::vector<std::string> exprs;
  std::uint64_t seed = 20260814;
  int max_degree = 6;
};

ordered_json jparams(const DParams& p) {
  return {{"q", to_text(p.q)}, {"gamma", to_text(p.gamma)}};
}

ordered_json jwitness(const IsoWitness& w) {
  return {{"name", w.name},
          {"source", jparams(w.source)},
          {"target", jparams(w.target)},
          {"images", ordered_json::array({to_text(w.images[0]),
                                          to_text(w.images[1]),
                                          to_text(w.images[2])})}};
}

ordered_json jcoords(const ModuliPoint& m) {
  ordered_json a = ordered_json::array();
  for (const auto& c : m.coords) a.push_back(to_text(c));
  return a;
}

ordered_json error_json(const char* type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

int fail(std::ostream& out, std::ostream& err, const char* type,
         const std::string& message) {
  out << error_json(type, message).dump(2) << '\n';
  err << "error: " << message << '\n';
  return 2;
}

const std::string& require_flag(const std::string& text, const char* flag) {
  if (text.empty())
    throw parse_error(std::string(flag) + " is required for this verb");
  return text;
}

AlgebraKind kind_from(const Opts& o, bool has_q) {
  if (o.algebra.empty()) return has_q ? AlgebraKind::D : AlgebraKind::H;
  if (o.algebra == "d" || o.algebra == "D") return AlgebraKind::D;
  if (o.algebra == "h" || o.algebra == "H") return AlgebraKind::H;
  throw parse_error("--algebra must be 'h' or 'd'");
}

/* Builds the working algebra from --q/--p, --gamma and the optional
 * --algebra override; the partner polynomial is always derived, never
 * taken from a second flag. */
AlgebraSpec spec_from(const Opts& o) {
  bool has_q = !o.q_text.empty(), has_p = !o.p_text.empty();
  if (has_q && has_p) throw parse_error("give only one of --q and --p");
  if (!has_q && !has_p) throw parse_error("one of --q or --p is required");
  Scalar gamma = parse_scalar(o.gamma_text);
  AlgebraKind kind = kind_from(o, has_q);
  if (has_q) {
    Poly q = parse_poly(o.q_text);
    if (kind == AlgebraKind::D) return AlgebraSpec::make(kind, q, gamma);
    return AlgebraSpec::make(kind, solve_p_from_q(q), gamma);
  }
  Poly p = parse_poly(o.p_text);
  if (kind == AlgebraKind::H) return AlgebraSpec::make(kind, p, gamma);
  return AlgebraSpec::make(kind, solve_q_from_p(p), gamma);
}

const std::string& single_expr(const Opts& o) {
  if (o.exprs.size() != 1) throw parse_error("give --expr exactly once");
  return o.exprs[0];
}

void require_two_exprs(const Opts& o) {
  if (o.exprs.size() != 2) throw parse_error("give --expr exactly twice");
}

ordered_json run_derive_p(const Opts& o) {
  Poly q = parse_poly(require_flag(o.q_text, "--q"));
  return {{"p", to_text(solve_p_from_q(q))}};
}

ordered_json run_derive_q(const Opts& o) {
  Poly p = parse_poly(require_flag(o.p_text, "--p"));
  return {{"q", to_text(solve_q_from_p(p))}};
}

ordered_json run_reduce(const Opts& o) {
  AlgebraSpec spec = spec_from(o);
  Element x = parse_element(spec, single_expr(o));
  return {{"element", to_text(reduce(spec, x))}};
}

ordered_json run_commutator(const Opts& o) {
  AlgebraSpec spec = spec_from(o);
  require_two_exprs(o);
  Element x = parse_element(spec, o.exprs[0]);
  Element y = parse_element(spec, o.exprs[1]);
  return {{"element", to_text(commutator(spec, x, y))}};
}

ordered_json run_center(const Opts& o) {
  bool has_q = !o.q_text.empty(), has_p = !o.p_text.empty();
  if (has_q == has_p) throw parse_error("give exactly one of --q and --p");
  Scalar gamma = parse_scalar(o.gamma_text);
  Poly q, p;
  if (has_q) {
    q = parse_poly(o.q_text);
    p = solve_p_from_q(q);
  } else {
    p = parse_poly(o.p_text);
    q = solve_q_from_p(p);
  }
  AlgebraSpec spec = AlgebraSpec::make(AlgebraKind::H, p, gamma);
  return {{"element", to_text(center_element(spec, q))}};
}

ordered_json run_is_central(const Opts& o) {
  AlgebraSpec spec = spec_from(o);
  Element x = parse_element(spec, single_expr(o));
  return {{"central", is_central(spec, x)}};
}

ordered_json run_diamond(const Opts& o) {
  AlgebraSpec spec = spec_from(o);
  DiamondReport r = check_diamond(spec);
  ordered_json entries = ordered_json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"overlap", e.overlap},
                       {"ok", e.ok},
                       {"left", to_text(e.left)},
                       {"right", to_text(e.right)}});
  return {{"ok", r.all_ok()}, {"overlaps", entries}};
}

ordered_json run_degree(const Opts& o) {
  AlgebraSpec spec = spec_from(o);
  Element x = parse_element(spec, single_expr(o));
  ordered_json result{{"degree", degree_standard(spec, x)}};
  try {
    LimitDegree d = degree_limit(x);
    result["limit_degree"] = ordered_json::array({d.a, d.b});
  } catch (const precondition_error&) {
    result["limit_degree"] = nullptr;  // w-exponent above 1
  }
  return result;
}

ordered_json run_iso_d(const Opts& o) {
  Poly q1 = parse_poly(require_flag(o.q_text, "--q"));
  Poly q2 = parse_poly(require_flag(o.q2_text, "--q2"));
  Scalar g1 = parse_scalar(o.gamma_text);
  Scalar g2 = parse_scalar(o.gamma2_text);
  auto [n1, xi1] = normalize_monic(q1, g1);
  auto [n2, xi2] = normalize_monic(q2, g2);
  auto w = is_isomorphic_D(n1, n2);
  ordered_json jw = nullptr;
  if (w) {
    IsoWitness full = *w;
    if (xi1 != Scalar(1))
      full = compose(full, scaling_witness(DParams{q1, g1}, xi1));
    if (xi2 != Scalar(1)) full = compose(scaling_witness(n2, xi2.inv()), full);
    jw = jwitness(full);
  }
  ordered_json result;
  result["isomorphic"] = w.has_value();
  result["case"] = nullptr;
  result["witness"] = jw;
  result["moduli"] = jcoords(moduli_invariants(n1));
  return result;
}

ordered_json run_iso_h(const Opts& o) {
  Poly p1 = parse_poly(require_flag(o.p_text, "--p"));
  Poly p2 = parse_poly(require_flag(o.p2_text, "--p2"));
  Scalar g1 = parse_scalar(o.gamma_text);
  Scalar g2 = parse_scalar(o.gamma2_text);
  HVerdict v = is_isomorphic_H(p1, g1, p2, g2);
  ordered_json result;
  result["isomorphic"] = v.isomorphic;
  result["case"] = v.case_label ? ordered_json(*v.case_label) : nullptr;
  result["witness"] = v.d_witness ? jwitness(*v.d_witness) : ordered_json(nullptr);
  result["moduli"] = nullptr;
  return result;
}

DParams normalized_params(const Opts& o) {
  Poly q = parse_poly(require_flag(o.q_text, "--q"));
  Scalar g = parse_scalar(o.gamma_text);
  return normalize_monic(q, g).first;
}

ordered_json run_aut(const Opts& o) {
  AutGroup grp = automorphism_group(normalized_params(o));
  ordered_json gens = ordered_json::array();
  for (const auto& w : grp.generators) gens.push_back(jwitness(w));
  return {{"group", grp.name}, {"order", grp.order}, {"generators", gens}};
}

ordered_json run_orbit(const Opts& o) {
  ordered_json members = ordered_json::array();
  for (const auto& m : orbit(normalized_params(o)))
    members.push_back({{"q", to_text(m.first.q)},
                       {"gamma", to_text(m.first.gamma)},
                       {"witness", m.second.name}});
  ordered_json result;
  result["size"] = members.size();
  result["members"] = members;
  return result;
}

ordered_json run_moduli(const Opts& o) {
  ModuliPoint m = moduli_invariants(normalized_params(o));
  return {{"deg_q", m.deg},
          {"type", "D" + std::to_string(m.deg + 1)},
          {"dimension", static_cast<int>(m.coords.size())},
          {"coords", jcoords(m)}};
}

ordered_json run_semiclassical(const Opts& o) {
  AlgebraSpec spec = spec_from(o);
  require_two_exprs(o);
  Element x = parse_element(spec, o.exprs[0]);
  Element y = parse_element(spec, o.exprs[1]);
  return {{"ok", semiclassical_check(spec, x, y)}};
}

int run_verify(const Opts& o, std::ostream& out, std::ostream& err) {
  ordered_json checks = ordered_json::array();
  bool all = true;
  const int total = check_count();
  for (int i = 1; i <= total; ++i) {
    CheckResult r = run_check(i, o.seed, o.max_degree);
    all = all && r.passed;
    err << '[' << std::setw(2) << i << '/' << total << "] " << std::left
        << std::setw(26) << r.name << std::right
        << (r.passed ? "PASS" : "FAIL") << '\n';
    if (!r.passed) err << "        " << r.detail << '\n';
    err.flush();
    ordered_json jc{{"index", r.index}, {"name", r.name}, {"passed", r.passed}};
    if (!r.passed) jc["detail"] = r.detail;
    checks.push_back(std::move(jc));
  }
  ordered_json summary{{"seed", o.seed},
                       {"max_degree", o.max_degree},
                       {"passed", all},
                       {"checks", checks}};
  out << summary.dump(2) << '\n';
  return all ? 0 : 1;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Opts o;
  CLI::App app{
      "Exact-arithmetic calculator for the deformed type-D Kleinian algebras "
      "H(P,gamma) and D(Q,gamma)",
      "dklein"};
  app.require_subcommand(1);

  auto add_spec = [&o](CLI::App* sub, bool with_algebra) {
    sub->add_option("--q", o.q_text, "polynomial Q in t (monic, degree >= 3)");
    sub->add_option("--p", o.p_text,
                    "polynomial P in t (leading term n*t^(n-1))");
    sub->add_option("--gamma", o.gamma_text, "scalar gamma (default 0)");
    if (with_algebra)
      sub->add_option("--algebra", o.algebra,
                      "h or d (default: d with --q, h with --p)");
  };
  auto add_expr = [&o](CLI::App* sub, const char* help) {
    sub->add_option("--expr", o.exprs, help);
  };

  CLI::App* c_derive_p =
      app.add_subcommand("derive-p", "Partner polynomial P of a monic Q");
  c_derive_p->add_option("--q", o.q_text, "monic polynomial Q in t")
      ->required();

  CLI::App* c_derive_q = app.add_subcommand(
      "derive-q", "Partner polynomial Q (zero constant term) of P");
  c_derive_q
      ->add_option("--p", o.p_text, "polynomial P with leading term n*t^(n-1)")
      ->required();

  CLI::App* c_reduce =
      app.add_subcommand("reduce", "Normal form of a word expression");
  add_spec(c_reduce, true);
  add_expr(c_reduce, "word expression in u, v, w");

  CLI::App* c_comm =
      app.add_subcommand("commutator", "Normal form of [x, y]");
  add_spec(c_comm, true);
  add_expr(c_comm, "word expression (give twice: x then y)");

  CLI::App* c_center = app.add_subcommand(
      "center", "Central element Omega of H = Q(u)+u*v^2+w^2-2*w*v-gamma*v");
  add_spec(c_center, false);

  CLI::App* c_is_central =
      app.add_subcommand("is-central", "Does the element commute with u, v, w?");
  add_spec(c_is_central, true);
  add_expr(c_is_central, "word expression in u, v, w");

  CLI::App* c_diamond = app.add_subcommand(
      "diamond", "Resolve all critical overlaps both ways and compare");
  add_spec(c_diamond, true);

  CLI::App* c_degree = app.add_subcommand(
      "degree", "Standard filtration degree (and limit degree if defined)");
  add_spec(c_degree, true);
  add_expr(c_degree, "word expression in u, v, w");

  CLI::App* c_iso_d = app.add_subcommand(
      "iso-d", "Decide D(Q,gamma) ~ D(Q2,gamma2) and produce a witness");
  c_iso_d->add_option("--q", o.q_text, "first Q")->required();
  c_iso_d->add_option("--gamma", o.gamma_text, "first gamma (default 0)");
  c_iso_d->add_option("--q2", o.q2_text, "second Q")->required();
  c_iso_d->add_option("--gamma2", o.gamma2_text, "second gamma (default 0)");

  CLI::App* c_iso_h = app.add_subcommand(
      "iso-h", "Decide H(P,gamma) ~ H(P2,gamma2) by the closed-form criteria");
  c_iso_h->add_option("--p", o.p_text, "first P")->required();
  c_iso_h->add_option("--gamma", o.gamma_text, "first gamma (default 0)");
  c_iso_h->add_option("--p2", o.p2_text, "second P")->required();
  c_iso_h->add_option("--gamma2", o.gamma2_text, "second gamma (default 0)");

  CLI::App* c_aut =
      app.add_subcommand("aut", "Automorphism group of D(Q,gamma)");
  c_aut->add_option("--q", o.q_text, "polynomial Q")->required();
  c_aut->add_option("--gamma", o.gamma_text, "scalar gamma (default 0)");

  CLI::App* c_orbit = app.add_subcommand(
      "orbit", "Parameters isomorphic to D(Q,gamma), with witnesses");
  c_orbit->add_option("--q", o.q_text, "polynomial Q")->required();
  c_orbit->add_option("--gamma", o.gamma_text, "scalar gamma (default 0)");

  CLI::App* c_moduli = app.add_subcommand(
      "moduli", "Isomorphism-class invariants of D(Q,gamma)");
  c_moduli->add_option("--q", o.q_text, "polynomial Q")->required();
  c_moduli->add_option("--gamma", o.gamma_text, "scalar gamma (default 0)");

  CLI::App* c_semi = app.add_subcommand(
      "semiclassical", "Check gr[x,y] = {gr x, gr y} for a pair of elements");
  add_spec(c_semi, true);
  add_expr(c_semi, "word expression (give twice: x then y)");

  CLI::App* c_verify = app.add_subcommand(
      "verify", "Run the whole property suite (deterministic per seed)");
  c_verify->add_option("--seed", o.seed, "PRNG seed (default 20260814)");
  c_verify->add_option("--max-degree", o.max_degree,
                       "cap on random polynomial degrees, >= 3 (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return 0;  // --help / --version
    out << error_json("parse_error", e.what()).dump(2) << '\n';
    return 2;
  }

  try {
    if (c_verify->parsed()) return run_verify(o, out, err);
    ordered_json result;
    if (c_derive_p->parsed())
      result = run_derive_p(o);
    else if (c_derive_q->parsed())
      result = run_derive_q(o);
    else if (c_reduce->parsed())
      result = run_reduce(o);
    else if (c_comm->parsed())
      result = run_commutator(o);
    else if (c_center->parsed())
      result = run_center(o);
    else if (c_is_central->parsed())
      result = run_is_central(o);
    else if (c_diamond->parsed())
      result = run_diamond(o);
    else if (c_degree->parsed())
      result = run_degree(o);
    else if (c_iso_d->parsed())
      result = run_iso_d(o);
    else if (c_iso_h->parsed())
      result = run_iso_h(o);
    else if (c_aut->parsed())
      result = run_aut(o);
    else if (c_orbit->parsed())
      result = run_orbit(o);
    else if (c_moduli->parsed())
      result = run_moduli(o);
    else if (c_semi->parsed())
      result = run_semiclassical(o);
    out << result.dump(2) << '\n';
    return 0;
  } catch (const parse_error& e) {
    return fail(out, err, "parse_error", e.what());
  } catch (const division_by_zero& e) {
    return fail(out, err, "division_by_zero", e.what());
  } catch (const zero_element_error& e) {
    return fail(out, err, "zero_element_error", e.what());
  } catch (const precondition_error& e) {
    return fail(out, err, "precondition_error", e.what());
  } catch (const invariant_violation& e) {
    return fail(out, err, "invariant_violation", e.what());
  } catch (const error& e) {
    return fail(out, err, "error", e.what());
  } catch (const std::exception& e) {
    return fail(out, err, "internal", e.what());
  }
}

}  // namespace dklein

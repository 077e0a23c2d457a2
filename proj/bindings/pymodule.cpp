#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "dklein/algebra.hpp"
#include "dklein/cli.hpp"
#include "dklein/errors.hpp"
#include "dklein/iso.hpp"
#include "dklein/poisson.hpp"
#include "dklein/poly.hpp"
#include "dklein/text.hpp"
#include "dklein/verify.hpp"

namespace py = pybind11;
using namespace dklein;

namespace {

AlgebraSpec build_spec(const std::string& algebra, const std::string& q,
                       const std::string& p, const std::string& gamma) {
  if (q.empty() == p.empty())
    throw precondition_error("give exactly one of q and p");
  AlgebraKind kind;
  if (algebra == "d" || algebra == "D")
    kind = AlgebraKind::D;
  else if (algebra == "h" || algebra == "H")
    kind = AlgebraKind::H;
  else if (algebra.empty())
    kind = q.empty() ? AlgebraKind::H : AlgebraKind::D;
  else
    throw precondition_error("algebra must be 'h' or 'd'");
  Scalar g = parse_scalar(gamma);
  if (!q.empty()) {
    Poly qq = parse_poly(q);
    return kind == AlgebraKind::D
               ? AlgebraSpec::make(kind, qq, g)
               : AlgebraSpec::make(kind, solve_p_from_q(qq), g);
  }
  Poly pp = parse_poly(p);
  return kind == AlgebraKind::H
             ? AlgebraSpec::make(kind, pp, g)
             : AlgebraSpec::make(kind, solve_q_from_p(pp), g);
}

struct PyAlgebra {
  AlgebraSpec spec;
  PyAlgebra(const std::string& algebra, const std::string& q,
            const std::string& p, const std::string& gamma)
      : spec(build_spec(algebra, q, p, gamma)) {}
};

py::dict params_dict(const DParams& p) {
  py::dict d;
  d["q"] = to_text(p.q);
  d["gamma"] = to_text(p.gamma);
  return d;
}

py::dict witness_dict(const IsoWitness& w) {
  py::dict d;
  d["name"] = w.name;
  d["source"] = params_dict(w.source);
  d["target"] = params_dict(w.target);
  py::list imgs;
  for (const auto& im : w.images) imgs.append(to_text(im));
  d["images"] = imgs;
  return d;
}

DParams monic_params(const std::string& q, const std::string& gamma) {
  return normalize_monic(parse_poly(q), parse_scalar(gamma)).first;
}

}  // namespace

PYBIND11_MODULE(_dklein, m) {
  m.doc() =
      "Exact symbolic computation in the deformed type-D Kleinian algebras "
      "H(P,gamma) and D(Q,gamma)";

  auto base = py::register_exception<error>(m, "Error");
  py::register_exception<parse_error>(m, "ParseError", base.ptr());
  py::register_exception<precondition_error>(m, "PreconditionError",
                                             base.ptr());
  py::register_exception<invariant_violation>(m, "InvariantViolation",
                                              base.ptr());

  py::class_<PyAlgebra>(m, "Algebra",
                        "One algebra H(P,gamma) or D(Q,gamma); all expression "
                        "arguments and results are text in the shared grammar")
      .def(py::init<const std::string&, const std::string&, const std::string&,
                    const std::string&>(),
           py::arg("algebra") = "", py::arg("q") = "", py::arg("p") = "",
           py::arg("gamma") = "0")
      .def_property_readonly("kind",
                             [](const PyAlgebra& a) {
                               return a.spec.kind() == AlgebraKind::D ? "d"
                                                                      : "h";
                             })
      .def_property_readonly("n", [](const PyAlgebra& a) { return a.spec.n(); })
      .def_property_readonly(
          "p", [](const PyAlgebra& a) { return to_text(a.spec.p()); })
      .def_property_readonly("q",
                             [](const PyAlgebra& a) -> py::object {
                               if (a.spec.kind() != AlgebraKind::D)
                                 return py::none();
                               return py::str(to_text(a.spec.q()));
                             })
      .def_property_readonly(
          "gamma", [](const PyAlgebra& a) { return to_text(a.spec.gamma()); })
      .def(
          "reduce",
          [](const PyAlgebra& a, const std::string& expr) {
            return to_text(reduce(a.spec, parse_element(a.spec, expr)));
          },
          py::arg("expr"), "Normal form of a word expression in u, v, w")
      .def(
          "commutator",
          [](const PyAlgebra& a, const std::string& x, const std::string& y) {
            return to_text(commutator(a.spec, parse_element(a.spec, x),
                                      parse_element(a.spec, y)));
          },
          py::arg("x"), py::arg("y"))
      .def(
          "is_central",
          [](const PyAlgebra& a, const std::string& expr) {
            return is_central(a.spec, parse_element(a.spec, expr));
          },
          py::arg("expr"))
      .def(
          "degree",
          [](const PyAlgebra& a, const std::string& expr) {
            return degree_standard(a.spec, parse_element(a.spec, expr));
          },
          py::arg("expr"), "Standard filtration degree (u:4, v:2n-2, w:2n)")
      .def(
          "limit_degree",
          [](const PyAlgebra& a, const std::string& expr) -> py::object {
            Element x = parse_element(a.spec, expr);
            try {
              LimitDegree d = degree_limit(x);
              return py::make_tuple(d.a, d.b);
            } catch (const precondition_error&) {
              return py::none();
            }
          },
          py::arg("expr"))
      .def("diamond_ok",
           [](const PyAlgebra& a) { return check_diamond(a.spec).all_ok(); })
      .def(
          "semiclassical_ok",
          [](const PyAlgebra& a, const std::string& x, const std::string& y) {
            return semiclassical_check(a.spec, parse_element(a.spec, x),
                                       parse_element(a.spec, y));
          },
          py::arg("x"), py::arg("y"));

  m.def(
      "derive_p",
      [](const std::string& q) { return to_text(solve_p_from_q(parse_poly(q))); },
      py::arg("q"), "Partner polynomial P of a monic Q (degree >= 3)");
  m.def(
      "derive_q",
      [](const std::string& p) { return to_text(solve_q_from_p(parse_poly(p))); },
      py::arg("p"), "Partner polynomial Q (zero constant term) of P");
  m.def(
      "center",
      [](const std::string& q, const std::string& gamma) {
        Poly qq = parse_poly(q);
        AlgebraSpec spec = AlgebraSpec::make(AlgebraKind::H, solve_p_from_q(qq),
                                             parse_scalar(gamma));
        return to_text(center_element(spec, qq));
      },
      py::arg("q"), py::arg("gamma") = "0",
      "Central element Q(u)+u*v^2+w^2-2*w*v-gamma*v of H");

  m.def(
      "iso_d",
      [](const std::string& q1, const std::string& g1, const std::string& q2,
         const std::string& g2) -> py::object {
        auto [n1, xi1] = normalize_monic(parse_poly(q1), parse_scalar(g1));
        auto [n2, xi2] = normalize_monic(parse_poly(q2), parse_scalar(g2));
        auto w = is_isomorphic_D(n1, n2);
        if (!w) return py::none();
        IsoWitness full = *w;
        if (xi1 != Scalar(1))
          full = compose(
              full, scaling_witness(DParams{parse_poly(q1), parse_scalar(g1)},
                                    xi1));
        if (xi2 != Scalar(1))
          full = compose(scaling_witness(n2, xi2.inv()), full);
        return witness_dict(full);
      },
      py::arg("q"), py::arg("gamma"), py::arg("q2"), py::arg("gamma2"),
      "Witness dict for D(Q,gamma) ~ D(Q2,gamma2), or None");
  m.def(
      "iso_h",
      [](const std::string& p1, const std::string& g1, const std::string& p2,
         const std::string& g2) {
        HVerdict v = is_isomorphic_H(parse_poly(p1), parse_scalar(g1),
                                     parse_poly(p2), parse_scalar(g2));
        py::dict d;
        d["isomorphic"] = v.isomorphic;
        d["case"] = v.case_label ? py::object(py::str(*v.case_label))
                                 : py::object(py::none());
        d["witness"] = v.d_witness ? py::object(witness_dict(*v.d_witness))
                                   : py::object(py::none());
        return d;
      },
      py::arg("p"), py::arg("gamma"), py::arg("p2"), py::arg("gamma2"));
  m.def(
      "aut",
      [](const std::string& q, const std::string& gamma) {
        AutGroup g = automorphism_group(monic_params(q, gamma));
        py::dict d;
        d["group"] = g.name;
        d["order"] = g.order;
        py::list gens;
        for (const auto& w : g.generators) gens.append(witness_dict(w));
        d["generators"] = gens;
        return d;
      },
      py::arg("q"), py::arg("gamma") = "0");
  m.def(
      "orbit",
      [](const std::string& q, const std::string& gamma) {
        py::list out;
        for (const auto& member : orbit(monic_params(q, gamma))) {
          py::dict d;
          d["q"] = to_text(member.first.q);
          d["gamma"] = to_text(member.first.gamma);
          d["witness"] = member.second.name;
          out.append(d);
        }
        return out;
      },
      py::arg("q"), py::arg("gamma") = "0");
  m.def(
      "moduli",
      [](const std::string& q, const std::string& gamma) {
        ModuliPoint mp = moduli_invariants(monic_params(q, gamma));
        py::dict d;
        d["deg_q"] = mp.deg;
        d["type"] = "D" + std::to_string(mp.deg + 1);
        py::list coords;
        for (const auto& c : mp.coords) coords.append(to_text(c));
        d["coords"] = coords;
        return d;
      },
      py::arg("q"), py::arg("gamma") = "0");

  m.def(
      "verify",
      [](std::uint64_t seed, int max_degree) {
        py::list out;
        for (const auto& r : run_all_checks(seed, max_degree)) {
          py::dict d;
          d["index"] = r.index;
          d["name"] = r.name;
          d["passed"] = r.passed;
          if (!r.passed) d["detail"] = r.detail;
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 20260814, py::arg("max_degree") = 6,
      "Run the whole property suite; returns one dict per check");
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> full;
        full.reserve(args.size() + 1);
        full.emplace_back("dklein");
        full.insert(full.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        argv.reserve(full.size());
        for (const auto& s : full) argv.push_back(s.c_str());
        std::ostringstream out, err;
        int code = cli_run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Invoke the CLI in-process; returns (exit_code, stdout, stderr)");
}

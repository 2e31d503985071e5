#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "weylab/commutant.hpp"
#include "weylab/curve.hpp"
#include "weylab/families.hpp"
#include "weylab/orbits.hpp"
#include "weylab/parser.hpp"
#include "weylab/rank2.hpp"
#include "weylab/solver.hpp"

namespace py = pybind11;
using namespace weylab;

namespace {

Poly<Rat> poly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return Poly<Rat>(std::move(c));
}

std::vector<std::string> poly_strings(const Poly<Rat>& p) {
  std::vector<std::string> out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).str());
  return out;
}

py::dict curve_dict(const SpectralCurve& c) {
  py::dict d;
  d["genus"] = c.genus;
  std::vector<std::string> cs;
  for (const Rat& v : c.c) cs.push_back(v.str());
  d["f_coeffs"] = cs;
  return d;
}

SpectralCurve curve_from_dict(const py::dict& d) {
  std::vector<Rat> c;
  for (const auto& s : d["f_coeffs"].cast<std::vector<std::string>>())
    c.push_back(parse_rational(s));
  return SpectralCurve(d["genus"].cast<int>(), std::move(c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact rank-two commuting differential operator toolkit";

  py::class_<WeylOp<Rat>>(m, "Op")
      .def(py::init([](const std::string& text) { return parse_op(text); }))
      .def("order", &WeylOp<Rat>::order)
      .def("is_zero", &WeylOp<Rat>::is_zero)
      .def("__add__", [](const WeylOp<Rat>& a, const WeylOp<Rat>& b) { return a + b; })
      .def("__sub__", [](const WeylOp<Rat>& a, const WeylOp<Rat>& b) { return a - b; })
      .def("__mul__", [](const WeylOp<Rat>& a, const WeylOp<Rat>& b) { return a * b; })
      .def("__neg__", [](const WeylOp<Rat>& a) { return -a; })
      .def("__eq__", [](const WeylOp<Rat>& a, const WeylOp<Rat>& b) { return a == b; })
      .def("__pow__", [](const WeylOp<Rat>& a, int k) { return op_pow(a, k); })
      .def("__repr__", [](const WeylOp<Rat>& a) { return print_op(a); })
      .def("__str__", [](const WeylOp<Rat>& a) { return print_op(a); });

  m.def("parse", [](const std::string& t) { return parse_op(t); });
  m.def("commutator", [](const WeylOp<Rat>& a, const WeylOp<Rat>& b) { return commutator(a, b); });
  m.def("adjoint", [](const WeylOp<Rat>& a) { return formal_adjoint(a); });
  m.def("triple_ad_x", [](const WeylOp<Rat>& a) { return triple_ad_x(a); });
  m.def("apply_word", [](const std::string& word, const WeylOp<Rat>& a) {
    return apply_aut(parse_aut_word(word), a);
  });

  m.def("build_l4", [](const std::vector<std::string>& V, const std::vector<std::string>& W) {
    return build_L4(poly_from_strings(V), poly_from_strings(W)).L4;
  });
  m.def("dixmier", [](const std::string& a3, const std::string& a2, const std::string& a1,
                      const std::string& a0) {
    return dixmier_pair(parse_rational(a3), parse_rational(a2), parse_rational(a1),
                        parse_rational(a0))
        .L4;
  });
  m.def("sharp", [](int g, const std::string& a3, const std::string& a2, const std::string& a1,
                    const std::string& a0) {
    return sharp_pair(g, parse_rational(a3), parse_rational(a2), parse_rational(a1),
                      parse_rational(a0))
        .L4;
  });
  m.def("mokhov", [](int g, int r, const std::string& a, const std::string& b) {
    return mokhov_L4(g, r, parse_rational(a), parse_rational(b));
  });

  m.def("find_commuting", [](const WeylOp<Rat>& L, int order, int maxdeg) {
    return find_commuting(L, order, maxdeg);
  });
  m.def("find_partner", [](const WeylOp<Rat>& L, int order, int bound) {
    return find_partner(L, order, bound);
  });
  m.def("default_partner_bound", [](const WeylOp<Rat>& L) { return default_partner_bound(L); });
  m.def("bc_curve", [](const WeylOp<Rat>& L4, const WeylOp<Rat>& M, int g) {
    const BCResult r = bc_curve(L4, M, g);
    py::dict d = curve_dict(r.curve);
    d["partner"] = r.partner;
    d["partner_normalized"] = r.partner_normalized;
    return d;
  });
  m.def("curve_is_squarefree", [](const py::dict& c) {
    return curve_is_squarefree(curve_from_dict(c));
  });

  m.def("lemma1_curve", [](int g, const std::string& a0, const std::string& a1) {
    return curve_dict(lemma1_curve(g, parse_rational(a0), parse_rational(a1)));
  });
  m.def("genus1_v_from_w", [](const std::vector<std::string>& W, const py::dict& curve) {
    return poly_strings(genus1_V_from_W(poly_from_strings(W), curve_from_dict(curve)));
  });
  m.def("solve_q", [](const std::vector<std::string>& V, const std::vector<std::string>& W,
                      int g, int xdeg_bound) {
    const SelfAdjointPair p = build_L4(poly_from_strings(V), poly_from_strings(W));
    auto [q, c] = solve_Q(p, g, xdeg_bound);
    py::dict d;
    d["q"] = qpoly_to_string(q);
    d["curve"] = curve_dict(c);
    return d;
  });

  m.def("leading_law", [](int mm) { return leading_law(mm).str(); });
  m.def("solve_vw", [](int mm, const std::vector<std::string>& curve, std::uint64_t seed,
                       int starts, double tol) {
    if (curve.size() != 3) throw Error("curve needs c2,c1,c0");
    const SpectralCurve target(
        1, {parse_rational(curve[2]), parse_rational(curve[1]), parse_rational(curve[0])});
    const VWSystem sys = assemble_system(mm, target);
    SolveReport rep = verify_candidate(multi_start_solve(sys, seed, starts, tol), sys);
    py::dict d;
    d["status"] = rep.status;
    d["residual"] = rep.residual;
    d["candidate"] = rep.candidate;
    d["verified"] = rep.verified;
    d["leading_law_error"] = rep.leading_law_error;
    if (rep.float_comm_norm >= 0) d["float_comm_norm"] = rep.float_comm_norm;
    return d;
  }, py::arg("m"), py::arg("curve"), py::arg("seed") = 0, py::arg("starts") = 200,
     py::arg("tol") = 1e-11);

  m.def("lemma31_certificate", [](int dega, int r, int r1, int n, int mm) {
    const Lemma31Certificate c = lemma31_excludes({dega, r, r1, n, mm});
    py::dict d;
    d["branch"] = c.branch;
    d["reason"] = c.reason;
    return d;
  });

  py::register_exception<Error>(m, "WeylabError");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "weylab/solver.hpp"

using namespace weylab;
using namespace weylab::testing;

namespace {

const SpectralCurve kDixmier5(1, {Rat(-5), Rat(0), Rat(0)});

std::vector<double> pack(const Poly<Rat>& V, const Poly<Rat>& W, int m) {
  std::vector<double> u;
  for (int i = 0; i <= m + 2; ++i) u.push_back(to_double(V.coeff(i)));
  for (int j = 0; j <= m; ++j) u.push_back(to_double(W.coeff(j)));
  return u;
}

}  // namespace

TEST_CASE("system shape") {
  const VWSystem s1 = assemble_system(1, kDixmier5);
  CHECK(s1.num_equations() == 4);
  CHECK(s1.num_unknowns() == 6);
  const VWSystem s3 = assemble_system(3, kDixmier5);
  CHECK(s3.num_equations() == 10);
  CHECK(s3.num_unknowns() == 10);
  CHECK_THROWS_AS(assemble_system(0, kDixmier5), Error);
}

TEST_CASE("leading law values") {
  CHECK(leading_law(1) == Rat(1, 2));
  CHECK(leading_law(2) == Rat(1, 8));
  CHECK(leading_law(3) == Rat(1, 18));
  // Dixmier: V leading 1, W leading 2, ratio 1/2
  CHECK(leading_law(1) == Rat(1) / Rat(2));
  CHECK_THROWS_AS(leading_law(0), Error);
}

TEST_CASE("quadratic tables match polynomial derivatives") {
  // B_{k,i} is the x^i coefficient of (x^{k+1})' (x^{i-k+1})', C_{k,i} the
  // second-derivative factor (x^{k+2})'' = C x^k
  Rng rng(61);
  std::uniform_int_distribution<int> d(1, 6);
  for (int t = 0; t < 50; ++t) {
    const int k = d(rng);
    const int i = k + d(rng);
    const Poly<Rat> prod = Poly<Rat>::monomial(Rat(1), k + 1).derive() *
                           Poly<Rat>::monomial(Rat(1), i - k + 1).derive();
    CHECK(Rat(table_B(k, i)) == prod.coeff(i));
    CHECK(Rat(table_C(k, i)) == Poly<Rat>::monomial(Rat(1), k + 2).derive(2).coeff(k));
  }
}

TEST_CASE("leading law kills the top of the quadratic form") {
  // with V = law(m) x^{m+2} and W = x^m the x^{2m} coefficient of
  // 4 V W_xx + 2 V_x W_x - 3 W^2 cancels, and any other ratio keeps it
  for (int m = 1; m <= 4; ++m) {
    const Poly<Rat> V = Poly<Rat>::monomial(leading_law(m), m + 2);
    const Poly<Rat> W = Poly<Rat>::monomial(Rat(1), m);
    CHECK(top_quadratic(V, W).coeff(2 * m) == 0);
    const Poly<Rat> Voff = Poly<Rat>::monomial(leading_law(m) + 1, m + 2);
    CHECK(top_quadratic(Voff, W).coeff(2 * m) != 0);
  }
}

TEST_CASE("residual and jacobian agree with finite differences") {
  Rng rng(62);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int m : {1, 2, 3}) {
    const VWSystem sys = assemble_system(m, kDixmier5);
    std::vector<double> u(static_cast<std::size_t>(sys.num_unknowns()));
    for (auto& v : u) v = gauss(rng);
    const Eigen::MatrixXd J = system_jacobian(sys, u);
    const double h = 1e-6;
    for (int c = 0; c < sys.num_unknowns(); ++c) {
      std::vector<double> up = u, um = u;
      up[static_cast<std::size_t>(c)] += h;
      um[static_cast<std::size_t>(c)] -= h;
      const Eigen::VectorXd fd = (system_residual(sys, up) - system_residual(sys, um)) / (2 * h);
      for (int k = 0; k < sys.num_equations(); ++k)
        CHECK(std::fabs(fd[k] - J(k, c)) < 1e-4 * std::max(1.0, std::fabs(J(k, c))));
    }
  }
}

TEST_CASE("residual vanishes at the Dixmier point") {
  const VWSystem sys = assemble_system(1, kDixmier5);
  const std::vector<double> u =
      pack(Poly<Rat>(std::vector<Rat>{5, 0, 0, 1}), Poly<Rat>(std::vector<Rat>{0, 2}), 1);
  CHECK(system_residual(sys, u).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(law_error(sys, u) == 0.0);
  const SolveReport rep = newton_solve(sys, u);
  CHECK(rep.status == "accepted");
  CHECK(rep.iterations == 0);
}

TEST_CASE("newton converges from a nearby start") {
  const VWSystem sys = assemble_system(1, kDixmier5);
  std::vector<double> u =
      pack(Poly<Rat>(std::vector<Rat>{5, 0, 0, 1}), Poly<Rat>(std::vector<Rat>{0, 2}), 1);
  for (auto& v : u) v += 1e-3;
  const SolveReport rep = newton_solve(sys, u);
  CHECK(rep.status == "accepted");
  CHECK(rep.residual < 1e-12);
  CHECK(rep.leading_law_error < 1e-10);
}

TEST_CASE("multi-start is deterministic in the seed") {
  const VWSystem sys = assemble_system(2, kDixmier5);
  const SolveReport a = multi_start_solve(sys, 7, 100);
  const SolveReport b = multi_start_solve(sys, 7, 100);
  CHECK(a.status == b.status);
  CHECK(a.start_index == b.start_index);
  CHECK(a.candidate == b.candidate);
  CHECK(a.residual == b.residual);
}

TEST_CASE("multi-start accepts m = 1, 2, 3 on the Dixmier curve") {
  for (int m : {1, 2, 3}) {
    const VWSystem sys = assemble_system(m, kDixmier5);
    const SolveReport rep = multi_start_solve(sys, 2026, 200);
    REQUIRE(rep.status == "accepted");
    CHECK(rep.residual < 1e-11);
    CHECK(rep.leading_law_error <= 1e-8);
  }
}

TEST_CASE("verification attaches float evidence when exactness fails") {
  const VWSystem sys = assemble_system(2, kDixmier5);
  SolveReport rep = multi_start_solve(sys, 3, 200);
  REQUIRE(rep.status == "accepted");
  rep = verify_candidate(rep, sys);
  if (!rep.verified) {
    CHECK(rep.float_comm_norm >= 0);
    CHECK(rep.float_comm_norm < 1e-6);
  }
}

TEST_CASE("verification rejects a perturbed candidate") {
  const VWSystem sys = assemble_system(1, kDixmier5);
  SolveReport rep;
  rep.m = 1;
  rep.candidate = pack(Poly<Rat>(std::vector<Rat>{5, 0, 0, 1}),
                       Poly<Rat>(std::vector<Rat>{0, 2}), 1);
  rep.status = "accepted";
  rep.leading_law_error = 0;
  const SolveReport good = verify_candidate(rep, sys);
  CHECK(good.verified);
  REQUIRE(good.rationalized);
  CHECK(good.exact_candidate == std::vector<Rat>{5, 0, 0, 1, 0, 2});

  rep.candidate[0] += 0.25;  // off the variety
  const SolveReport bad = verify_candidate(rep, sys);
  CHECK(!bad.verified);

  rep.candidate[0] -= 0.25;
  rep.leading_law_error = 1.0;  // law violation short-circuits
  const SolveReport skipped = verify_candidate(rep, sys);
  CHECK(!skipped.verified);
  CHECK(skipped.float_comm_norm < 0);
}

TEST_CASE("translation gauge freedom") {
  // shifting x moves solutions to solutions
  const SelfAdjointPair p = solve_m1_exact(kDixmier5);
  CHECK(eq11_residual(p, kDixmier5).is_zero());
  const Poly<Rat> shift(std::vector<Rat>{Rat(3, 7), Rat(1)});
  const SelfAdjointPair q = build_L4(p.V.compose(shift), p.W.compose(shift));
  CHECK(eq11_residual(q, kDixmier5).is_zero());
}

TEST_CASE("m = 1 closed form") {
  const SelfAdjointPair p = solve_m1_exact(kDixmier5);
  CHECK(p.W == Poly<Rat>(std::vector<Rat>{0, 2}));
  CHECK(p.V == Poly<Rat>(std::vector<Rat>{5, 0, 0, 1}));
  // a fractional curve
  const SpectralCurve c(1, {Rat(1, 3), Rat(-2), Rat(1, 2)});
  const SelfAdjointPair f = solve_m1_exact(c, Rat(3));
  CHECK(eq11_residual(f, c).is_zero());
  CHECK_THROWS_AS(solve_m1_exact(c, Rat(0)), Error);
}

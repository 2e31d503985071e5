#include "weylab/cli.hpp"

#include <cstdlib>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylab/commutant.hpp"
#include "weylab/curve.hpp"
#include "weylab/errors.hpp"
#include "weylab/families.hpp"
#include "weylab/orbits.hpp"
#include "weylab/parser.hpp"
#include "weylab/rank2.hpp"
#include "weylab/solver.hpp"
#include "weylab/weyl.hpp"

namespace weylab {

namespace {

int log_level() {
  const char* v = std::getenv("WEYLAB_LOG");
  if (!v) return 1;
  const std::string s(v);
  if (s == "quiet") return 0;
  if (s == "debug") return 2;
  return 1;
}

std::vector<Rat> parse_rat_list(const std::string& text, std::size_t expect) {
  std::vector<Rat> v;
  std::size_t p = 0;
  while (p <= text.size()) {
    std::size_t comma = text.find(',', p);
    const std::string tok =
        comma == std::string::npos ? text.substr(p) : text.substr(p, comma - p);
    v.push_back(parse_rational(detail::strip(tok)));
    if (comma == std::string::npos) break;
    p = comma + 1;
  }
  if (v.size() != expect)
    throw Error("expected " + std::to_string(expect) + " comma-separated rationals");
  return v;
}

nlohmann::json report_to_json(const SolveReport& rep) {
  nlohmann::json j;
  j["status"] = rep.status;
  j["m"] = rep.m;
  nlohmann::json cand;
  std::vector<double> alpha(rep.candidate.begin(), rep.candidate.begin() + rep.m + 3);
  std::vector<double> beta(rep.candidate.begin() + rep.m + 3, rep.candidate.end());
  cand["alpha"] = alpha;
  cand["beta"] = beta;
  j["candidate"] = cand;
  j["residual"] = rep.residual;
  j["verified"] = rep.verified;
  if (rep.rationalized) {
    std::vector<std::string> ex;
    for (const Rat& r : rep.exact_candidate) ex.push_back(r.str());
    j["exact_candidate"] = ex;
  }
  if (rep.float_comm_norm >= 0) j["float_comm_norm"] = rep.float_comm_norm;
  if (rep.curve_echo) j["curve_echo"] = curve_to_json(*rep.curve_echo);
  return j;
}

struct CertPrinter {
  static nlohmann::json to_json(const Lemma31Certificate& c) {
    nlohmann::json j;
    j["branch"] = c.branch;
    j["dega"] = c.query.dega;
    j["r"] = c.query.r;
    j["r1"] = c.query.r1;
    j["n"] = c.query.n;
    j["m"] = c.query.m;
    j["reason"] = c.reason;
    return j;
  }
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact toolkit for rank-two commuting differential operators"};
  app.require_subcommand(1);

  std::string expr_a, expr_b, word_text, family_name, curve_text;
  int order = 6, maxdeg = 8, genus = 1, m_param = 1, g_param = 1, r_param = 1;
  int dega = 0, r_cert = 9, r1_cert = 7, n_cert = -1, m_cert = -1;
  int starts = 200, maxit = 100, jobs = 1;
  std::uint64_t seed = 0;
  double tol = 1e-11;
  std::string a0_text = "0", a1_text = "1", a2_text = "0", a3_text = "1";
  std::string a_text = "1", b_text = "0";
  bool with_curve = false;

  auto* c_eval = app.add_subcommand("eval", "normalize an operator expression");
  c_eval->add_option("expr", expr_a)->required();

  auto* c_comm = app.add_subcommand("commute", "commutator of two operators; exit 0 iff zero");
  c_comm->add_option("a", expr_a)->required();
  c_comm->add_option("b", expr_b)->required();

  auto* c_part = app.add_subcommand("partner", "basis of the bounded commutant");
  c_part->add_option("--order", order)->required();
  c_part->add_option("--maxdeg", maxdeg)->required();
  c_part->add_option("L4", expr_a)->required();

  auto* c_curve = app.add_subcommand("curve", "spectral curve of a commuting pair");
  c_curve->add_option("--genus", genus)->required();
  c_curve->add_option("L4", expr_a)->required();
  c_curve->add_option("L6", expr_b)->required();

  auto* c_fam = app.add_subcommand("family", "named operator families");
  c_fam->add_option("name", family_name)->required()->check(CLI::IsMember({"dixmier", "sharp", "mokhov"}));
  c_fam->add_option("--g", g_param);
  c_fam->add_option("--r", r_param);
  c_fam->add_option("--a3", a3_text);
  c_fam->add_option("--a2", a2_text);
  c_fam->add_option("--a1", a1_text);
  c_fam->add_option("--a0", a0_text);
  c_fam->add_option("--a", a_text);
  c_fam->add_option("--b", b_text);
  c_fam->add_flag("--curve", with_curve, "also print the JSON spectral curve");

  auto* c_solve = app.add_subcommand("solve-vw", "numerical genus-1 system solver");
  c_solve->add_option("--m", m_param)->required();
  c_solve->add_option("--curve", curve_text, "c2,c1,c0")->required();
  c_solve->add_option("--seed", seed);
  c_solve->add_option("--tol", tol);
  c_solve->add_option("--starts", starts);
  c_solve->add_option("--maxit", maxit);
  c_solve->add_option("--jobs", jobs, "batch width hint; solves stay deterministic");

  auto* c_rec = app.add_subcommand("recurrence-curve", "curve of the cosh family");
  c_rec->add_option("--g", g_param)->required();
  c_rec->add_option("--alpha0", a0_text)->required();
  c_rec->add_option("--alpha1", a1_text)->required();

  auto* c_aut = app.add_subcommand("aut", "tame automorphism actions");
  auto* c_apply = c_aut->add_subcommand("apply", "apply a generator word");
  c_apply->add_option("--word", word_text)->required();
  c_apply->add_option("expr", expr_a)->required();

  auto* c_cert = app.add_subcommand("certificate", "orbit-exclusion certificate");
  c_cert->add_option("--dega", dega)->required();
  c_cert->add_option("--r", r_cert)->required();
  c_cert->add_option("--r1", r1_cert)->required();
  c_cert->add_option("--n", n_cert);
  c_cert->add_option("--m", m_cert);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_eval) {
      out << print_op(parse_op(expr_a)) << "\n";
      return 0;
    }
    if (*c_comm) {
      const WeylOp<Rat> C = commutator(parse_op(expr_a), parse_op(expr_b));
      out << print_op(C) << "\n";
      return C.is_zero() ? 0 : 1;
    }
    if (*c_part) {
      const WeylOp<Rat> L = parse_op(expr_a);
      const auto basis = find_commuting(L, order, maxdeg);
      for (const auto& M : basis) out << print_op(M) << "\n";
      if (log_level() >= 1) err << "dimension " << basis.size() << "\n";
      return basis.empty() ? 1 : 0;
    }
    if (*c_curve) {
      const BCResult bc = bc_curve(parse_op(expr_a), parse_op(expr_b), genus);
      out << curve_to_json(bc.curve).dump() << "\n";
      return 0;
    }
    if (*c_fam) {
      WeylOp<Rat> L;
      int g_curve = 1;
      if (family_name == "dixmier") {
        L = dixmier_pair(parse_rational(a3_text), parse_rational(a2_text),
                         parse_rational(a1_text), parse_rational(a0_text))
                .L4;
      } else if (family_name == "sharp") {
        L = sharp_pair(g_param, parse_rational(a3_text), parse_rational(a2_text),
                       parse_rational(a1_text), parse_rational(a0_text))
                .L4;
        g_curve = g_param;
      } else {
        L = mokhov_L4(g_param, r_param, parse_rational(a_text), parse_rational(b_text));
        g_curve = g_param;
      }
      out << print_op(L) << "\n";
      if (with_curve) {
        const WeylOp<Rat> M = find_partner(L, 4 * g_curve + 2, default_partner_bound(L));
        out << curve_to_json(bc_curve(L, M, g_curve).curve).dump() << "\n";
      }
      return 0;
    }
    if (*c_solve) {
      const std::vector<Rat> cs = parse_rat_list(curve_text, 3);
      const SpectralCurve target(1, {cs[2], cs[1], cs[0]});
      const VWSystem sys = assemble_system(m_param, target);
      SolveReport rep = multi_start_solve(sys, seed, starts, tol, maxit);
      rep = verify_candidate(rep, sys);
      nlohmann::json arr = nlohmann::json::array();
      arr.push_back(report_to_json(rep));
      out << arr.dump() << "\n";
      return rep.status == "accepted" ? 0 : 1;
    }
    if (*c_rec) {
      const SpectralCurve c =
          lemma1_curve(g_param, parse_rational(a0_text), parse_rational(a1_text));
      out << curve_to_json(c).dump() << "\n";
      return 0;
    }
    if (*c_apply) {
      const AutWord w = parse_aut_word(word_text);
      out << print_op(apply_aut(w, parse_op(expr_a))) << "\n";
      return 0;
    }
    if (*c_cert) {
      if (n_cert >= 0 && m_cert >= 0) {
        const Lemma31Certificate cert =
            lemma31_excludes({dega, r_cert, r1_cert, n_cert, m_cert});
        out << CertPrinter::to_json(cert).dump() << "\n";
        return 0;
      }
      nlohmann::json summary;
      int counts[4] = {0, 0, 0, 0};
      for (int n = 0; n <= 50; ++n)
        for (int m = 0; m <= 50; ++m) {
          const Lemma31Certificate cert = lemma31_excludes({dega, r_cert, r1_cert, n, m});
          ++counts[cert.branch];
        }
      summary["range"] = "n,m in [0,50]^2";
      summary["branch1"] = counts[1];
      summary["branch2"] = counts[2];
      summary["branch3"] = counts[3];
      out << summary.dump() << "\n";
      return 0;
    }
  } catch (const SyntaxError& e) {
    err << "syntax error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionUnmet& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const NotCommuting& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    const std::string w = e.what();
    err << w << "\n";
    return w.find("post-verification") != std::string::npos ? 3 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace weylab

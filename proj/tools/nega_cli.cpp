// Command-line surface: field/table queries, transforms and verdicts on
// truth-table files, family construction and closed-form prediction,
// exhaustive verification targets, the conjecture scan, Kloosterman sums and
// the permutation-criterion checks.
//
// Exit status: 0 success (and zero disagreements for verify/scan), 1 when a
// verification run found disagreements, 2 on usage or parameter errors.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nega/boolfun.hpp"
#include "nega/families.hpp"
#include "nega/kernels.hpp"
#include "nega/kloosterman.hpp"
#include "nega/permpoly.hpp"
#include "nega/verify.hpp"

namespace {

using namespace nega;

u32 parse_hex(const std::string& s) {
  std::size_t pos = 0;
  const unsigned long v = std::stoul(s, &pos, 16);
  if (pos != s.size()) throw std::invalid_argument("malformed hex element: " + s);
  return static_cast<u32>(v);
}

std::string modulus_bits(int n, u32 modulus) {
  std::string s;
  for (int i = n; i >= 0; --i) s += static_cast<char>('0' + ((modulus >> i) & 1));
  return s;
}

struct FieldArgs {
  int n = 0;
  std::string modulus_hex;

  Field make() const {
    if (!modulus_hex.empty()) return Field(n, parse_hex(modulus_hex));
    return Field(n);
  }
};

void add_field_args(CLI::App* cmd, FieldArgs& fa, bool required = true) {
  auto* o = cmd->add_option("--n", fa.n, "extension degree n of GF(2^n)");
  if (required) o->required();
  cmd->add_option("--modulus", fa.modulus_hex,
                  "irreducible modulus as a hex integer (bit i = coeff of x^i); "
                  "defaults to the shipped table entry for n");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FamilyInstance parse_instance(const std::string& family, int n, const std::string& lambda,
                              const std::string& u, const std::string& v,
                              const std::string& alpha, int k, int r) {
  FamilyInstance inst;
  inst.family = family_from_name(family);
  inst.n = n;
  if (!lambda.empty()) inst.lambda = parse_hex(lambda);
  if (!u.empty()) inst.u = parse_hex(u);
  if (!v.empty()) inst.v = parse_hex(v);
  if (!alpha.empty()) inst.alpha = parse_hex(alpha);
  inst.k = k;
  inst.r = r;
  if (inst.family == Family::Thm5 && inst.k == 0) inst.k = 1;
  if (inst.family == Family::Niho && inst.r == 0)
    inst.r = (1 << (n / 2 - 1)) + 1;  // the proven Niho exponent
  return inst;
}

int report_status(const VerificationReport& rep) {
  std::cout << rep.to_line() << "\n";
  return rep.clean() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"negabent-function construction and exhaustive verification over GF(2^n)"};
  app.require_subcommand(1);

  std::string jobs_note = "shard parallelism (output independent of the value)";

  // --- field ---
  FieldArgs field_fa;
  bool field_table = false;
  auto* cmd_field = app.add_subcommand("field", "print modulus and self-dual basis for n");
  add_field_args(cmd_field, field_fa, false);
  cmd_field->add_flag("--table", field_table, "print the full field table (n 1..20)");

  // --- transform ---
  std::string tr_in;
  bool tr_walsh = false, tr_nega = false;
  auto* cmd_tr = app.add_subcommand("transform", "Walsh / nega-Hadamard spectrum of a truth-table file");
  cmd_tr->add_option("--in", tr_in, "truth-table file")->required();
  cmd_tr->add_flag("--walsh", tr_walsh, "print the Walsh spectrum");
  cmd_tr->add_flag("--nega", tr_nega, "print the nega-Hadamard spectrum");

  // --- check ---
  std::string ck_in, ck_family, ck_lambda, ck_u, ck_v, ck_alpha;
  FieldArgs ck_fa;
  int ck_k = 0, ck_r = 0;
  auto* cmd_ck = app.add_subcommand("check", "bent/negabent verdicts for a truth-table file or family instance");
  cmd_ck->add_option("--in", ck_in, "truth-table file");
  cmd_ck->add_option("--family", ck_family, "family id (thm2|thm4|thm5|thm6|thm7|thm8|niho|monomial-d)");
  add_field_args(cmd_ck, ck_fa, false);
  cmd_ck->add_option("--lambda", ck_lambda);
  cmd_ck->add_option("--u", ck_u);
  cmd_ck->add_option("--v", ck_v);
  cmd_ck->add_option("--alpha", ck_alpha);
  cmd_ck->add_option("--k", ck_k);
  cmd_ck->add_option("--r", ck_r);

  // --- construct ---
  std::string co_family, co_lambda, co_u, co_v, co_alpha, co_out, co_basis = "selfdual";
  FieldArgs co_fa;
  int co_k = 0, co_r = 0;
  auto* cmd_co = app.add_subcommand("construct", "emit a family instance's truth table");
  cmd_co->add_option("--family", co_family)->required();
  add_field_args(cmd_co, co_fa);
  cmd_co->add_option("--lambda", co_lambda);
  cmd_co->add_option("--u", co_u);
  cmd_co->add_option("--v", co_v);
  cmd_co->add_option("--alpha", co_alpha);
  cmd_co->add_option("--k", co_k);
  cmd_co->add_option("--r", co_r);
  cmd_co->add_option("--basis", co_basis, "selfdual|poly (default selfdual)");
  cmd_co->add_option("--out", co_out, "output file (default stdout)");

  // --- predict ---
  std::string pr_family, pr_lambda, pr_u, pr_v, pr_alpha;
  FieldArgs pr_fa;
  int pr_k = 0, pr_r = 0;
  auto* cmd_pr = app.add_subcommand("predict", "closed-form verdict for a family instance");
  cmd_pr->add_option("--family", pr_family)->required();
  add_field_args(cmd_pr, pr_fa);
  cmd_pr->add_option("--lambda", pr_lambda);
  cmd_pr->add_option("--u", pr_u);
  cmd_pr->add_option("--v", pr_v);
  cmd_pr->add_option("--alpha", pr_alpha);
  cmd_pr->add_option("--k", pr_k);
  cmd_pr->add_option("--r", pr_r);

  // --- verify ---
  std::string vf_target;
  FieldArgs vf_fa;
  int vf_k = 0, vf_r = 0, vf_jobs = 1;
  auto* cmd_vf = app.add_subcommand("verify", "exhaustively replay a result against brute force");
  cmd_vf->add_option("target", vf_target, "thm2|cor1|thm4|thm5thm6|thm7|thm8|counts")->required();
  add_field_args(cmd_vf, vf_fa);
  cmd_vf->add_option("--k", vf_k, "k for thm5thm6");
  cmd_vf->add_option("--r", vf_r, "r for thm5thm6");
  cmd_vf->add_option("--jobs", vf_jobs, jobs_note);

  // --- scan ---
  std::string sc_what;
  FieldArgs sc_fa;
  int sc_jobs = 1, sc_rfrom = -1, sc_rto = -1;
  auto* cmd_sc = app.add_subcommand("scan", "scan the conjectured Niho classification");
  cmd_sc->add_option("what", sc_what, "conjecture1")->required();
  add_field_args(cmd_sc, sc_fa);
  cmd_sc->add_option("--jobs", sc_jobs, jobs_note);
  cmd_sc->add_option("--r-from", sc_rfrom, "first r to scan (resume support)");
  cmd_sc->add_option("--r-to", sc_rto, "last r to scan (resume support)");

  // --- kloosterman ---
  FieldArgs kl_fa;
  std::string kl_a, kl_b;
  auto* cmd_kl = app.add_subcommand("kloosterman", "Kloosterman sum, Weil bound, 4A identity");
  add_field_args(cmd_kl, kl_fa);
  cmd_kl->add_option("--a", kl_a)->required();
  cmd_kl->add_option("--b", kl_b)->required();

  // --- lemma4 / lemma5 ---
  int l4_n = 0, l4_k = 0;
  auto* cmd_l4 = app.add_subcommand("lemma4", "gcd(n,3k) = gcd(n,k) permutation criterion");
  cmd_l4->add_option("--n", l4_n)->required();
  cmd_l4->add_option("--k", l4_k)->required();

  int l5_k = 0, l5_r = 0;
  std::string l5_lambda;
  auto* cmd_l5 = app.add_subcommand("lemma5", "gcd(lambda + x + lambda x^2, x^r - 1) criterion over F_{2^k}");
  cmd_l5->add_option("--k", l5_k)->required();
  cmd_l5->add_option("--r", l5_r)->required();
  cmd_l5->add_option("--lambda", l5_lambda, "element of F_{2^k}, hex")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_field->parsed()) {
      if (field_table) {
        for (int n = 1; n <= 20; ++n)
          std::cout << n << " " << modulus_bits(n, Field::default_modulus(n)) << "\n";
        return 0;
      }
      if (field_fa.n == 0) throw std::invalid_argument("field: need --n or --table");
      const Field f = field_fa.make();
      std::cout << "n=" << f.n() << " modulus=" << modulus_bits(f.n(), f.modulus())
                << " (0x" << std::hex << f.modulus() << std::dec << ")\n";
      std::cout << "selfdual basis:";
      for (u32 b : f.self_dual_basis().elts)
        std::cout << " 0x" << std::hex << b << std::dec;
      std::cout << "\n";
      return 0;
    }

    if (cmd_tr->parsed()) {
      const TruthTable tt = TruthTable::from_file_string(read_file(tr_in));
      if (!tr_walsh && !tr_nega) tr_walsh = tr_nega = true;
      if (tr_walsh) {
        std::cout << "walsh:";
        for (i32 w : walsh_spectrum(tt)) std::cout << " " << w;
        std::cout << "\n";
      }
      if (tr_nega) {
        std::cout << "nega:";
        for (const GaussianInt& g : nega_spectrum(tt))
          std::cout << " " << g.re << (g.im < 0 ? "-" : "+") << std::abs(g.im) << "i";
        std::cout << "\n";
      }
      return 0;
    }

    if (cmd_ck->parsed()) {
      if (!ck_in.empty()) {
        const TruthTable tt = TruthTable::from_file_string(read_file(ck_in));
        std::cout << "bent=" << (is_bent(tt) ? "yes" : "no") << "\n";
        if (tt.index_basis() == IndexBasis::SelfDual) {
          std::cout << "negabent=" << (is_negabent_spectral(tt) ? "yes" : "no") << "\n";
        } else {
          // poly-indexed: the intrinsic criterion is the basis-free verdict
          if (ck_fa.n == 0) ck_fa.n = tt.n();
          const Field f = ck_fa.make();
          if (f.n() != tt.n()) throw std::invalid_argument("check: --n does not match file");
          const bool nb = negabent_criterion(f, [&](u32 x) { return tt.get(x); });
          std::cout << "negabent=" << (nb ? "yes" : "no") << "\n";
        }
        return 0;
      }
      if (ck_family.empty())
        throw std::invalid_argument("check: need --in or --family");
      const Field f = ck_fa.make();
      const FamilyInstance inst =
          parse_instance(ck_family, ck_fa.n, ck_lambda, ck_u, ck_v, ck_alpha, ck_k, ck_r);
      const auto fn = build_function(inst, f);
      const TruthTable tt = TruthTable::build(f, IndexBasis::SelfDual, fn);
      std::cout << "bent=" << (is_bent(tt) ? "yes" : "no") << "\n";
      std::cout << "negabent=" << (is_negabent_spectral(tt) ? "yes" : "no") << "\n";
      std::cout << "criterion=" << (negabent_criterion(f, fn) ? "yes" : "no") << "\n";
      return 0;
    }

    if (cmd_co->parsed()) {
      const Field f = co_fa.make();
      const FamilyInstance inst =
          parse_instance(co_family, co_fa.n, co_lambda, co_u, co_v, co_alpha, co_k, co_r);
      IndexBasis basis;
      if (co_basis == "selfdual")
        basis = IndexBasis::SelfDual;
      else if (co_basis == "poly")
        basis = IndexBasis::Poly;
      else
        throw std::invalid_argument("construct: --basis must be selfdual or poly");
      const TruthTable tt = TruthTable::build(f, basis, build_function(inst, f));
      const std::string text = tt.to_file_string();
      if (co_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(co_out);
        if (!out) throw std::runtime_error("cannot write " + co_out);
        out << text;
      }
      return 0;
    }

    if (cmd_pr->parsed()) {
      const Field f = pr_fa.make();
      const FamilyInstance inst =
          parse_instance(pr_family, pr_fa.n, pr_lambda, pr_u, pr_v, pr_alpha, pr_k, pr_r);
      const Verdict v = predict_negabent(inst, f);
      std::cout << verdict_name(v.status) << " (" << v.clause << ")\n";
      if (inst.family == Family::Thm2) {
        if (inst.lambda != 0) {
          std::cout << "bent=" << (predict_bent(f, inst.lambda, inst.u, inst.v) ? "yes" : "no")
                    << "\n";
          std::cout << "bent-negabent="
                    << (predict_bent_negabent(f, inst.lambda, inst.u, inst.v) ? "yes" : "no")
                    << "\n";
        } else {
          std::cout << "bent=n/a (lambda=0)\n";
        }
      }
      return 0;
    }

    if (cmd_vf->parsed()) {
      const Field f = vf_fa.make();
      VerifyOptions opt;
      opt.jobs = vf_jobs;
      if (vf_target == "thm2") return report_status(verify_thm2(f, opt));
      if (vf_target == "cor1") return report_status(verify_cor1(f, opt));
      if (vf_target == "thm4") return report_status(verify_thm4(f, opt));
      if (vf_target == "thm5thm6") {
        if (vf_k <= 0 || vf_r <= 0)
          throw std::invalid_argument("verify thm5thm6: need --k and --r");
        return report_status(verify_thm5_thm6(f, vf_k, vf_r, opt));
      }
      if (vf_target == "thm7") return report_status(verify_thm7(f, opt));
      if (vf_target == "thm8") return report_status(verify_thm8(f, opt));
      if (vf_target == "counts")
        return report_status(verify_proof_counts_thm2_lambda1(f, opt));
      throw std::invalid_argument("verify: unknown target " + vf_target);
    }

    if (cmd_sc->parsed()) {
      if (sc_what != "conjecture1")
        throw std::invalid_argument("scan: unknown scan " + sc_what);
      const Field f = sc_fa.make();
      VerifyOptions opt;
      opt.jobs = sc_jobs;
      opt.r_from = sc_rfrom;
      opt.r_to = sc_rto;
      bool clean = true;
      for (const VerificationReport& rep : scan_conjecture1_per_r(f, opt)) {
        std::cout << rep.to_line() << "\n";
        clean = clean && rep.clean();
      }
      return clean ? 0 : 1;
    }

    if (cmd_kl->parsed()) {
      const Field f = kl_fa.make();
      const u32 a = parse_hex(kl_a), b = parse_hex(kl_b);
      const i64 k = kloosterman(f, a, b);
      const double bound = 2.0 * std::sqrt(static_cast<double>(f.size()));
      std::cout << "K=" << k << "\n";
      std::cout << "bound=" << bound << " holds="
                << (static_cast<double>(k) * k <= 4.0 * f.size() ? "yes" : "no") << "\n";
      if (a != 0 && b != 0) {
        const i64 A = lemma2_count(f, a, b);
        const i64 residual = 4 * A + k - (static_cast<i64>(f.size()) - 1);
        std::cout << "A=" << A << " identity_residual=" << residual << "\n";
      }
      return 0;
    }

    if (cmd_l4->parsed()) {
      std::cout << "lemma4(n=" << l4_n << ", k=" << l4_k
                << ")=" << (lemma4_condition(l4_n, l4_k) ? "permutation" : "not-permutation")
                << "\n";
      return 0;
    }

    if (cmd_l5->parsed()) {
      const Field fk(l5_k);
      const u32 lambda = parse_hex(l5_lambda);
      std::cout << "lemma5(k=" << l5_k << ", r=" << l5_r << ", lambda=0x" << std::hex
                << lambda << std::dec << ")="
                << (lemma5_condition(fk, lambda, l5_r) ? "permutation" : "not-permutation")
                << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

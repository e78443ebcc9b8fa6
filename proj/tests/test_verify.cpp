#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nega/boolfun.hpp"
#include "nega/kernels.hpp"
#include "nega/verify.hpp"

using namespace nega;

namespace {
std::string normalized(const VerificationReport& r) { return r.to_line(false); }
}  // namespace

TEST_CASE("replay driver: counts, ordering, shard independence") {
  auto item = [](u64 i) {
    ItemOutcome o;
    o.checked = 1;
    if (i % 3 == 0) {
      o.disagree = 1;
      o.ces.push_back({"i=" + std::to_string(i), "p", "a"});
    } else {
      o.agree = 1;
    }
    return o;
  };
  const ItemOutcome a = replay(20, 1, item);
  const ItemOutcome b = replay(20, 2, item);
  const ItemOutcome c = replay(20, 7, item);
  CHECK(a.checked == 20);
  CHECK(a.disagree == 7);
  CHECK(a.agree == 13);
  REQUIRE(a.ces.size() == 7);
  CHECK(a.ces.front().params == "i=0");
  CHECK(a.ces.back().params == "i=18");
  for (std::size_t i = 0; i < a.ces.size(); ++i) {
    CHECK(a.ces[i].params == b.ces[i].params);
    CHECK(a.ces[i].params == c.ces[i].params);
  }
  CHECK(b.checked == a.checked);
  CHECK(c.disagree == a.disagree);
}

TEST_CASE("thm2 replay: n=2 and n=4 are clean, instance counts match") {
  const Field f2(2);
  const VerificationReport r2 = verify_thm2(f2);
  CHECK(r2.space == 2 * 3 * 3);
  CHECK(r2.checked == r2.space);
  CHECK(r2.disagreements == 0);

  const Field f4(4);
  const VerificationReport r4 = verify_thm2(f4);
  CHECK(r4.space == 4 * 15 * 15);  // 900 instances
  CHECK(r4.checked == 900);
  CHECK(r4.disagreements == 0);
  CHECK(r4.clean());
}

TEST_CASE("cor1 replay: closed-form counts reproduced at n=2 and n=4") {
  const Field f2(2);
  CHECK(verify_cor1(f2).clean());
  const Field f4(4);
  const VerificationReport r = verify_cor1(f4);
  CHECK(r.checked == 4);  // one count per lambda
  CHECK(r.clean());
}

TEST_CASE("thm4 replay: n=2..5 clean") {
  for (int n = 2; n <= 5; ++n) {
    const Field f(n);
    const VerificationReport r = verify_thm4(f);
    CHECK(r.space == static_cast<u64>(f.size() - 1) * (f.size() - 1));
    CHECK(r.disagreements == 0);
  }
}

TEST_CASE("thm5/thm6 replay: (4,1,4) and (6,2,3)") {
  const Field f4(4);
  const VerificationReport a = verify_thm5_thm6(f4, 1, 4);
  CHECK(a.clean());
  CHECK(a.checked > 0);

  const Field f6(6);
  const VerificationReport b = verify_thm5_thm6(f6, 2, 3);
  CHECK(b.clean());
  CHECK(b.checked > 0);

  CHECK_THROWS_AS(verify_thm5_thm6(f6, 4, 2), std::invalid_argument);  // 4*2 != 6
}

TEST_CASE("thm7 replay at n=6: exactly lambda in {0,1}") {
  const Field f(6);
  const VerificationReport r = verify_thm7(f);
  CHECK(r.space == 64);
  CHECK(r.checked == 64);
  CHECK(r.disagreements == 0);
  // recount the negabent side directly
  u32 negabent = 0;
  for (u32 lambda = 0; lambda < 64; ++lambda)
    if (negabent_criterion(f, [&](u32 x) {
          return f.trace_bit(f.mul(lambda, f.pow(x, 11)));
        }))
      ++negabent;
  CHECK(negabent == 2);
  const Field f4(4);
  CHECK_THROWS_AS(verify_thm7(f4), std::invalid_argument);  // k = 2 even
}

TEST_CASE("thm8 replay: n=4 clean, includes alpha = 0") {
  const Field f(4);
  const VerificationReport r = verify_thm8(f);
  CHECK(r.space == 16);
  CHECK(r.checked == 16);
  CHECK(r.disagreements == 0);
}

TEST_CASE("conjecture1 scan: n=4 and n=6 clean") {
  const Field f4(4);
  const VerificationReport r4 = scan_conjecture1(f4);
  CHECK(r4.disagreements == 0);
  const Field f6(6);
  const VerificationReport r6 = scan_conjecture1(f6);
  CHECK(r6.disagreements == 0);
  // per-r reports cover r = 2..2^(m-1)+1
  const std::vector<VerificationReport> parts = scan_conjecture1_per_r(f6);
  CHECK(parts.size() == 4);  // r in {2,3,4,5}
  for (const VerificationReport& p : parts) CHECK(p.clean());
}

TEST_CASE("conjecture1 scan honors the r range options (resume support)") {
  const Field f6(6);
  VerifyOptions opt;
  opt.r_from = 3;
  opt.r_to = 4;
  const std::vector<VerificationReport> parts = scan_conjecture1_per_r(f6, opt);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].target == "conjecture1.r=3");
  CHECK(parts[1].target == "conjecture1.r=4");
}

TEST_CASE("verify ops enforce their stated parameter domains") {
  const Field f14(14);
  CHECK_THROWS_AS(verify_thm2(f14), std::invalid_argument);   // n <= 12
  const Field f3(3);
  CHECK_THROWS_AS(verify_thm2(f3), std::invalid_argument);    // n even
  const Field f12(12);
  CHECK_THROWS_AS(verify_thm4(f12), std::invalid_argument);   // n <= 10
  const Field f1(1);
  CHECK_THROWS_AS(verify_thm4(f1), std::invalid_argument);    // n >= 2
}

TEST_CASE("proof-count replay at n=4") {
  const Field f(4);
  const VerificationReport r = verify_proof_counts_thm2_lambda1(f);
  CHECK(r.space == 15 * 15);
  CHECK(r.clean());
}

TEST_CASE("reports are deterministic across runs and worker counts") {
  const Field f4(4);
  VerifyOptions one, two;
  one.jobs = 1;
  two.jobs = 2;
  CHECK(normalized(verify_thm2(f4, one)) == normalized(verify_thm2(f4, two)));
  CHECK(normalized(verify_thm2(f4, one)) == normalized(verify_thm2(f4, one)));
  CHECK(normalized(verify_thm4(f4, one)) == normalized(verify_thm4(f4, two)));
  const Field f6(6);
  CHECK(normalized(scan_conjecture1(f6, one)) == normalized(scan_conjecture1(f6, two)));
}

TEST_CASE("report line format") {
  VerificationReport r;
  r.target = "demo";
  r.n = 4;
  r.space = 10;
  r.checked = 10;
  r.agreements = 9;
  r.disagreements = 1;
  r.counterexamples.push_back({"u=0x1 v=0x2", "Negabent", "NotNegabent"});
  r.elapsed_ms = 17;
  CHECK(r.to_line() ==
        "target=demo n=4 space=10 checked=10 agree=9 disagree=1 "
        "counterexamples=[(u=0x1 v=0x2;predicted=Negabent;actual=NotNegabent)] "
        "elapsed_ms=17");
  CHECK(r.to_line(false) ==
        "target=demo n=4 space=10 checked=10 agree=9 disagree=1 "
        "counterexamples=[(u=0x1 v=0x2;predicted=Negabent;actual=NotNegabent)]");
}

TEST_CASE("counterexample cap") {
  auto item = [](u64 i) {
    ItemOutcome o;
    o.checked = 1;
    o.disagree = 1;
    o.ces.push_back({"i=" + std::to_string(i), "p", "a"});
    return o;
  };
  ItemOutcome out = replay(300, 3, item);
  CHECK(out.ces.size() == 300);  // the driver itself does not cap; reports do
  // report-level capping is exercised through verify wrappers; emulate here
  VerificationReport rep;
  rep.counterexamples.assign(out.ces.begin(), out.ces.end());
  if (rep.counterexamples.size() > 100) rep.counterexamples.resize(100);
  CHECK(rep.counterexamples.size() == 100);
  CHECK(rep.counterexamples.front().params == "i=0");
}

TEST_CASE("verify fast tables equal evaluator-built tables (route integrity)") {
  // the verify loops assemble packed tables from linear-form words; they must
  // match the generic evaluator route for the same instances
  const Field f(4);
  const int k = 2;
  const u64 e = (u64(1) << k) + 1;
  for (u32 lambda : f.subfield(k))
    for (u32 u : {1u, 5u, 9u})
      for (u32 v : {3u, 7u, 15u}) {
        const FamilyInstance inst{Family::Thm2, 4, lambda, u, v, 0, 0, 0};
        const auto fn = build_function(inst, f);
        // generic route
        TruthTable slow(4, IndexBasis::Poly);
        for (u32 x = 0; x < 16; ++x) slow.set(x, fn(x));
        // word route, as in verify_thm2
        std::vector<u64> quad(1, 0);
        for (u32 x = 0; x < 16; ++x)
          if (f.subfield_trace_bit(f.mul(lambda, f.pow(x, e)), k))
            quad[0] |= u64(1) << x;
        u64 fast = quad[0] ^ (kernels::linear_form_word(f.tr_form_mask(u), 0) &
                              kernels::linear_form_word(f.tr_form_mask(v), 0) &
                              0xffffULL);
        CHECK((slow.words()[0] & 0xffffULL) == (fast & 0xffffULL));
      }
}

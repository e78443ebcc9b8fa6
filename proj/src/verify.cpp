#include "nega/verify.hpp"

#include <chrono>
#include <sstream>
#include <thread>

#include "nega/boolfun.hpp"
#include "nega/kernels.hpp"
#include "nega/permpoly.hpp"

namespace nega {

std::string VerificationReport::to_line(bool with_elapsed) const {
  std::ostringstream s;
  s << "target=" << target << " n=" << n << " space=" << space
    << " checked=" << checked << " agree=" << agreements
    << " disagree=" << disagreements << " counterexamples=[";
  for (std::size_t i = 0; i < counterexamples.size(); ++i) {
    if (i) s << ",";
    s << "(" << counterexamples[i].params << ";predicted="
      << counterexamples[i].predicted << ";actual=" << counterexamples[i].actual
      << ")";
  }
  s << "]";
  if (with_elapsed) s << " elapsed_ms=" << elapsed_ms;
  return s.str();
}

ItemOutcome replay(u64 items, int jobs, const std::function<ItemOutcome(u64)>& fn) {
  if (jobs < 1) throw std::invalid_argument("replay: jobs must be >= 1");
  const u64 workers = std::min<u64>(static_cast<u64>(jobs), std::max<u64>(items, 1));
  std::vector<ItemOutcome> parts(workers);
  auto run_block = [&](u64 w, u64 lo, u64 hi) {
    ItemOutcome acc;
    for (u64 i = lo; i < hi; ++i) {
      ItemOutcome one = fn(i);
      acc.checked += one.checked;
      acc.agree += one.agree;
      acc.disagree += one.disagree;
      for (auto& ce : one.ces) acc.ces.push_back(std::move(ce));
    }
    parts[w] = std::move(acc);
  };
  if (workers <= 1) {
    run_block(0, 0, items);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (u64 w = 0; w < workers; ++w) {
      const u64 lo = items * w / workers;
      const u64 hi = items * (w + 1) / workers;
      threads.emplace_back(run_block, w, lo, hi);
    }
    for (auto& t : threads) t.join();
  }
  ItemOutcome merged;
  for (ItemOutcome& p : parts) {
    merged.checked += p.checked;
    merged.agree += p.agree;
    merged.disagree += p.disagree;
    for (auto& ce : p.ces) merged.ces.push_back(std::move(ce));
  }
  return merged;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  i64 ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

VerificationReport finish(std::string target, int n, u64 space, ItemOutcome&& out,
                          const VerifyOptions& opt, const Timer& t) {
  VerificationReport r;
  r.target = std::move(target);
  r.n = n;
  r.space = space;
  r.checked = out.checked;
  r.agreements = out.agree;
  r.disagreements = out.disagree;
  r.counterexamples = std::move(out.ces);
  if (r.counterexamples.size() > opt.counterexample_cap)
    r.counterexamples.resize(opt.counterexample_cap);
  r.elapsed_ms = t.ms();
  return r;
}

void note(ItemOutcome& o, bool agree, const FamilyInstance& inst,
          const std::string& predicted, const std::string& actual) {
  ++o.checked;
  if (agree) {
    ++o.agree;
  } else {
    ++o.disagree;
    o.ces.push_back({inst.param_string(), predicted, actual});
  }
}

// Monomial families: base[x] = x^d pretabulated once per exponent, then one
// packed table per coefficient c.
std::vector<u32> power_table(const Field& f, u64 d) {
  std::vector<u32> t(f.size());
  for (u32 x = 0; x < f.size(); ++x) t[x] = f.pow(x, d);
  return t;
}

std::vector<u64> scaled_trace_table(const Field& f, const std::vector<u32>& base, u32 c) {
  // Tr(c * y) is linear in y: one parity per point instead of a field mul
  const u32 mc = f.tr_form_mask(c);
  std::vector<u64> words((f.size() + 63) >> 6, 0);
  for (u32 x = 0; x < f.size(); ++x)
    if (Field::parity(mc & base[x])) words[x >> 6] |= 1ULL << (x & 63);
  return words;
}

const char* bool_verdict(bool negabent) { return negabent ? "Negabent" : "NotNegabent"; }

}  // namespace

VerificationReport verify_thm2(const Field& f, const VerifyOptions& opt) {
  Timer timer;
  if (f.n() % 2 != 0 || f.n() > 12)
    throw std::invalid_argument("verify_thm2: n must be even, n <= 12");
  const int k = f.n() / 2;
  const std::vector<u32> lambdas = f.subfield(k);
  const u32 nstar = f.size() - 1;
  const u64 e = (u64(1) << k) + 1;
  const std::vector<u32> norm = power_table(f, e);
  const u32 nw = std::max(1u, f.size() >> 6);

  auto item = [&](u64 li) {
    const u32 lambda = lambdas[li];
    // quadratic part Tr_1^k(lambda x^(2^k+1)), packed
    std::vector<u64> quad(nw, 0);
    for (u32 x = 0; x < f.size(); ++x)
      if (f.subfield_trace_bit(f.mul(lambda, norm[x]), k))
        quad[x >> 6] |= 1ULL << (x & 63);
    ItemOutcome out;
    std::vector<u64> table(nw);
    for (u32 u = 1; u <= nstar; ++u) {
      const u32 mu = f.tr_form_mask(u);
      for (u32 v = 1; v <= nstar; ++v) {
        const u32 mv = f.tr_form_mask(v);
        for (u32 b = 0; b < nw; ++b)
          table[b] = quad[b] ^ (kernels::linear_form_word(mu, b) &
                                kernels::linear_form_word(mv, b));
        const FamilyInstance inst{Family::Thm2, f.n(), lambda, u, v, 0, 0, 0};
        const Verdict pred = predict_negabent(inst, f);
        const bool actual = negabent_criterion_table(f, table);
        note(out, (pred.status == VerdictStatus::Negabent) == actual, inst,
             verdict_name(pred.status), bool_verdict(actual));
      }
    }
    return out;
  };
  ItemOutcome out = replay(lambdas.size(), opt.jobs, item);
  return finish("thm2", f.n(), static_cast<u64>(lambdas.size()) * nstar * nstar,
                std::move(out), opt, timer);
}

VerificationReport verify_cor1(const Field& f, const VerifyOptions& opt) {
  Timer timer;
  if (f.n() % 2 != 0) throw std::invalid_argument("verify_cor1: n must be even");
  const int k = f.n() / 2;
  const std::vector<u32> lambdas = f.subfield(k);
  const u32 nstar = f.size() - 1;
  const u64 e = (u64(1) << k) + 1;
  const std::vector<u32> norm = power_table(f, e);
  const u32 nw = std::max(1u, f.size() >> 6);

  auto item = [&](u64 li) {
    const u32 lambda = lambdas[li];
    std::vector<u64> quad(nw, 0);
    for (u32 x = 0; x < f.size(); ++x)
      if (f.subfield_trace_bit(f.mul(lambda, norm[x]), k))
        quad[x >> 6] |= 1ULL << (x & 63);
    u64 count = 0;
    std::vector<u64> table(nw);
    for (u32 u = 1; u <= nstar; ++u) {
      const u32 mu = f.tr_form_mask(u);
      for (u32 v = 1; v <= nstar; ++v) {
        if (u == v) continue;
        const u32 mv = f.tr_form_mask(v);
        for (u32 b = 0; b < nw; ++b)
          table[b] = quad[b] ^ (kernels::linear_form_word(mu, b) &
                                kernels::linear_form_word(mv, b));
        if (negabent_criterion_table(f, table)) ++count;
      }
    }
    const u64 expected = corollary1_count(f, lambda);
    ItemOutcome out;
    FamilyInstance inst{Family::Thm2, f.n(), lambda, 0, 0, 0, 0, 0};
    note(out, count == expected, inst, "count=" + std::to_string(expected),
         "count=" + std::to_string(count));
    return out;
  };
  ItemOutcome out = replay(lambdas.size(), opt.jobs, item);
  return finish("cor1", f.n(), lambdas.size(), std::move(out), opt, timer);
}

VerificationReport verify_thm4(const Field& f, const VerifyOptions& opt) {
  Timer timer;
  if (f.n() < 2 || f.n() > 10)
    throw std::invalid_argument("verify_thm4: need 2 <= n <= 10");
  const u32 nstar = f.size() - 1;
  const u32 nw = std::max(1u, f.size() >> 6);
  auto item = [&](u64 ui) {
    const u32 u = static_cast<u32>(ui) + 1;
    const u32 mu = f.tr_form_mask(u);
    ItemOutcome out;
    std::vector<u64> table(nw);
    for (u32 v = 1; v <= nstar; ++v) {
      const u32 mv = f.tr_form_mask(v);
      for (u32 b = 0; b < nw; ++b)
        table[b] = kernels::linear_form_word(mu, b) & kernels::linear_form_word(mv, b);
      const FamilyInstance inst{Family::Thm4, f.n(), 0, u, v, 0, 0, 0};
      const Verdict pred = predict_negabent(inst, f);
      const bool actual = negabent_criterion_table(f, table);
      note(out, (pred.status == VerdictStatus::Negabent) == actual, inst,
           verdict_name(pred.status), bool_verdict(actual));
    }
    return out;
  };
  ItemOutcome out = replay(nstar, opt.jobs, item);
  return finish("thm4", f.n(), static_cast<u64>(nstar) * nstar, std::move(out), opt,
                timer);
}

VerificationReport verify_thm5_thm6(const Field& f, int k, int r,
                                    const VerifyOptions& opt) {
  Timer timer;
  const int n = f.n();
  if (k < 1 || r < 1 || k * r != n)
    throw std::invalid_argument("verify_thm5_thm6: need n = r*k");
  if (n % 2 != 0) throw std::invalid_argument("verify_thm5_thm6: n must be even");
  const u32 nstar = f.size() - 1;
  const u64 e = (u64(1) << k) + 1;
  const std::vector<u32> norm = power_table(f, e);
  const u32 nw = std::max(1u, f.size() >> 6);
  const u32 m1 = f.tr_form_mask(1);

  const bool thm5_applies = lemma4_condition(n, k);
  std::vector<u32> sub = f.subfield(k);
  std::vector<u32> thm6_lambdas;  // nonzero, passing the lemma-5 gcd criterion
  for (u32 l : sub)
    if (l != 0 && lemma5_condition(f, l, r)) thm6_lambdas.push_back(l);

  // outer items: [thm5 (1 slot if applicable)] + thm6 lambdas + corollary filter check
  const u64 thm5_slots = thm5_applies ? 1 : 0;
  const u64 items = thm5_slots + thm6_lambdas.size() + 1;

  auto check_v_loop = [&](ItemOutcome& out, const FamilyInstance& base,
                          const std::vector<u64>& quad) {
    std::vector<u64> table(nw);
    for (u32 v = 1; v <= nstar; ++v) {
      FamilyInstance inst = base;
      inst.v = v;
      const Verdict pred = predict_negabent(inst, f);
      if (pred.status != VerdictStatus::Negabent) continue;  // one-directional claim
      const u32 mv = f.tr_form_mask(v);
      for (u32 b = 0; b < nw; ++b)
        table[b] = quad[b] ^ (kernels::linear_form_word(m1, b) &
                              kernels::linear_form_word(mv, b));
      const bool actual = negabent_criterion_table(f, table);
      note(out, actual, inst, verdict_name(pred.status), bool_verdict(actual));
    }
  };

  auto item = [&](u64 idx) {
    ItemOutcome out;
    if (idx < thm5_slots) {
      std::vector<u64> quad(nw, 0);
      for (u32 x = 0; x < f.size(); ++x)
        if (f.trace_bit(norm[x])) quad[x >> 6] |= 1ULL << (x & 63);
      check_v_loop(out, FamilyInstance{Family::Thm5, n, 0, 0, 0, 0, k, 0}, quad);
      return out;
    }
    if (idx < thm5_slots + thm6_lambdas.size()) {
      const u32 lambda = thm6_lambdas[idx - thm5_slots];
      std::vector<u64> quad(nw, 0);
      for (u32 x = 0; x < f.size(); ++x)
        if (f.trace_bit(f.mul(lambda, norm[x]))) quad[x >> 6] |= 1ULL << (x & 63);
      check_v_loop(out, FamilyInstance{Family::Thm6, n, lambda, 0, 0, 0, k, r}, quad);
      return out;
    }
    // corollary lambda-filter cross-check against the gcd criterion
    if (r == 3 || r == 4 || r == 5) {
      const Field fk(k);  // lambda filters are statements inside F_{2^k}
      for (u32 l = 1; l < fk.size(); ++l) {
        bool filter;
        if (r == 3) {
          filter = l != 1;  // lambda in F_{2^k} \ {0, 1}
        } else if (r == 4) {
          filter = true;  // any nonzero lambda
        } else {
          // lambda outside {0, omega, omega^2}: exclude the solutions of
          // x^2 + x + 1 = 0 (the two cube roots of unity outside F_2)
          filter = !(l != 1 && fk.add(fk.mul(l, l), fk.add(l, 1)) == 0);
        }
        const bool gcd_ok = lemma5_condition(fk, l, r);
        FamilyInstance inst{Family::Thm6, n, l, 0, 0, 0, k, r};
        note(out, filter == gcd_ok, inst,
             std::string("cor-filter=") + (filter ? "pass" : "excluded"),
             std::string("lemma5=") + (gcd_ok ? "pass" : "excluded"));
      }
    }
    return out;
  };

  ItemOutcome out = replay(items, opt.jobs, item);
  const u64 space =
      (thm5_slots + thm6_lambdas.size()) * nstar + ((r >= 3 && r <= 5) ? (1u << k) - 1 : 0);
  VerificationReport rep =
      finish("thm5thm6", n, space, std::move(out), opt, timer);
  return rep;
}

VerificationReport verify_thm7(const Field& f, const VerifyOptions& opt) {
  Timer timer;
  const int n = f.n();
  if (n % 2 != 0 || (n / 2) % 2 == 0 || n / 2 < 3)
    throw std::invalid_argument("verify_thm7: need n = 2k with k odd, k >= 3");
  const u64 d = (u64(1) << (n / 2)) + 3;
  const std::vector<u32> xd = power_table(f, d);
  auto item = [&](u64 li) {
    const u32 lambda = static_cast<u32>(li);
    const std::vector<u64> table = scaled_trace_table(f, xd, lambda);
    const FamilyInstance inst{Family::MonomialD, n, lambda, 0, 0, 0, 0, 0};
    const Verdict pred = predict_negabent(inst, f);
    const bool actual = negabent_criterion_table(f, table);
    ItemOutcome out;
    note(out, (pred.status == VerdictStatus::Negabent) == actual, inst,
         verdict_name(pred.status), bool_verdict(actual));
    return out;
  };
  ItemOutcome out = replay(f.size(), opt.jobs, item);
  return finish("thm7", n, f.size(), std::move(out), opt, timer);
}

VerificationReport verify_thm8(const Field& f, const VerifyOptions& opt) {
  Timer timer;
  const int n = f.n();
  if (n % 2 != 0) throw std::invalid_argument("verify_thm8: n must be even");
  const int m = n / 2;
  const int r = (1 << (m - 1)) + 1;
  const std::vector<u32> xd = power_table(f, niho_exponent(r, m));
  auto item = [&](u64 ai) {
    const u32 alpha = static_cast<u32>(ai);
    const std::vector<u64> table = scaled_trace_table(f, xd, alpha);
    const FamilyInstance inst{Family::Niho, n, 0, 0, 0, alpha, 0, r};
    const bool pred = f.add(alpha, f.frob(alpha, m)) != 1;
    const bool actual = negabent_criterion_table(f, table);
    ItemOutcome out;
    note(out, pred == actual, inst, bool_verdict(pred), bool_verdict(actual));
    return out;
  };
  ItemOutcome out = replay(f.size(), opt.jobs, item);
  return finish("thm8", n, f.size(), std::move(out), opt, timer);
}

namespace {

VerificationReport scan_conjecture1_one_r(const Field& f, int r,
                                          const VerifyOptions& opt) {
  Timer timer;
  const int m = f.n() / 2;
  const std::vector<u32> xd = power_table(f, niho_exponent(r, m));
  auto item = [&](u64 ai) {
    const u32 alpha = static_cast<u32>(ai) + 1;  // alpha = 0 handled below
    const std::vector<u64> table = scaled_trace_table(f, xd, alpha);
    const FamilyInstance inst{Family::Niho, f.n(), 0, 0, 0, alpha, 0, r};
    const bool pred = conjecture1_predicate(r, alpha, m, f);
    const bool actual = negabent_criterion_table(f, table);
    ItemOutcome out;
    note(out, pred == actual, inst, bool_verdict(pred), bool_verdict(actual));
    return out;
  };
  ItemOutcome out = replay(f.size() - 1, opt.jobs, item);
  {
    // alpha = 0 triviality: the zero function must be negabent at every r
    const std::vector<u64> zero((f.size() + 63) >> 6, 0);
    const FamilyInstance inst{Family::Niho, f.n(), 0, 0, 0, 0, 0, r};
    const bool actual = negabent_criterion_table(f, zero);
    note(out, actual, inst, "Negabent", bool_verdict(actual));
  }
  VerificationReport rep = finish("conjecture1.r=" + std::to_string(r), f.n(),
                                  f.size(), std::move(out), opt, timer);
  return rep;
}

}  // namespace

std::vector<VerificationReport> scan_conjecture1_per_r(const Field& f,
                                                       const VerifyOptions& opt) {
  if (f.n() % 2 != 0) throw std::invalid_argument("scan_conjecture1: n must be even");
  const int m = f.n() / 2;
  if (m < 2) throw std::invalid_argument("scan_conjecture1: need n >= 4");
  int lo = 2, hi = (1 << (m - 1)) + 1;
  if (opt.r_from >= 0) lo = std::max(lo, opt.r_from);
  if (opt.r_to >= 0) hi = std::min(hi, opt.r_to);
  std::vector<VerificationReport> out;
  for (int r = lo; r <= hi; ++r) out.push_back(scan_conjecture1_one_r(f, r, opt));
  return out;
}

VerificationReport scan_conjecture1(const Field& f, const VerifyOptions& opt) {
  Timer timer;
  std::vector<VerificationReport> parts = scan_conjecture1_per_r(f, opt);
  VerificationReport rep;
  rep.target = "conjecture1";
  rep.n = f.n();
  for (const VerificationReport& p : parts) {
    rep.space += p.space;
    rep.checked += p.checked;
    rep.agreements += p.agreements;
    rep.disagreements += p.disagreements;
    for (const Counterexample& ce : p.counterexamples)
      rep.counterexamples.push_back(ce);
  }
  if (rep.counterexamples.size() > opt.counterexample_cap)
    rep.counterexamples.resize(opt.counterexample_cap);
  rep.elapsed_ms = timer.ms();
  return rep;
}

VerificationReport verify_proof_counts_thm2_lambda1(const Field& f,
                                                    const VerifyOptions& opt) {
  Timer timer;
  if (f.n() % 2 != 0 || f.n() < 4)
    throw std::invalid_argument("verify_proof_counts: n must be even, n >= 4");
  const int k = f.n() / 2;
  const std::vector<u32> sub = f.subfield(k);
  const u32 nstar = f.size() - 1;
  auto item = [&](u64 ui) {
    const u32 u = static_cast<u32>(ui) + 1;
    const bool u_in = f.in_subfield(u, k);
    ItemOutcome out;
    for (u32 v = 1; v <= nstar; ++v) {
      const bool v_in = f.in_subfield(v, k);
      const bool s_in = f.in_subfield(u ^ v, k) || (u ^ v) == 0;
      u64 expected;
      if (u_in && v_in)
        expected = (u64(1) << k) - 1;
      else if (u_in != v_in)
        expected = (u64(1) << (k - 1)) - 1;
      else if (s_in)
        expected = (u64(1) << (k - 1)) - 1;
      else
        expected = (u64(1) << (k - 2)) - 1;
      u64 count = 0;
      for (u32 a : sub)
        if (a != 0 && f.trace_bit(f.mul(u, a)) == 0 && f.trace_bit(f.mul(v, a)) == 0)
          ++count;
      FamilyInstance inst{Family::Thm2, f.n(), 1, u, v, 0, 0, 0};
      note(out, count == expected, inst, "N=" + std::to_string(expected),
           "N=" + std::to_string(count));
    }
    return out;
  };
  ItemOutcome out = replay(nstar, opt.jobs, item);
  return finish("thm2-proof-counts", f.n(), static_cast<u64>(nstar) * nstar,
                std::move(out), opt, timer);
}

}  // namespace nega

#include "nega/kloosterman.hpp"

#include <vector>

#include "nega/kernels.hpp"

namespace nega {

i64 kloosterman(const Field& f, u32 a, u32 b) {
  const std::vector<u32>& inv = f.inverse_table();
  i64 sum = 0;
  for (u32 x = 1; x < f.size(); ++x)
    sum += (f.trace_bit(f.mul(a, x)) ^ f.trace_bit(f.mul(b, inv[x]))) ? -1 : 1;
  return sum;
}

namespace {

// Packed tables of x -> Tr(c / x) for every c, bit at x = 0 forced to 0.
std::vector<u64> inverse_trace_tables(const Field& f, u32 nw) {
  const std::vector<u32>& inv = f.inverse_table();
  std::vector<u64> tb(static_cast<std::size_t>(f.size()) * nw, 0);
  for (u32 c = 0; c < f.size(); ++c) {
    u64* words = tb.data() + static_cast<std::size_t>(c) * nw;
    for (u32 x = 1; x < f.size(); ++x)
      if (f.trace_bit(f.mul(c, inv[x]))) words[x >> 6] |= 1ULL << (x & 63);
  }
  return tb;
}

}  // namespace

bool weil_bound_holds(const Field& f) {
  const u32 size = f.size();
  const u32 nw = std::max(1u, size >> 6);
  const std::vector<u64> tb = inverse_trace_tables(f, nw);
  const i64 limit = i64(4) << f.n();  // (2 sqrt(2^n))^2
  const u64 x0_mask = ~1ULL;          // drop x = 0
  for (u32 a = 0; a < size; ++a) {
    const u32 ma = f.tr_form_mask(a);
    for (u32 b = a == 0 ? 1 : 0; b < size; ++b) {
      const u64* tbw = tb.data() + static_cast<std::size_t>(b) * nw;
      i64 ones = 0;
      for (u32 w = 0; w < nw; ++w) {
        u64 word = kernels::linear_form_word(ma, w) ^ tbw[w];
        if (w == 0) word &= x0_mask;
        if (f.n() < 6) word &= (1ULL << size) - 1;
        ones += __builtin_popcountll(word);
      }
      const i64 k = (i64(size) - 1) - 2 * ones;
      if (k * k > limit) return false;
    }
  }
  return true;
}

i64 lemma2_count(const Field& f, u32 b, u32 c) {
  if (b == 0 || c == 0)
    throw std::invalid_argument("lemma2_count: b and c must be nonzero");
  const std::vector<u32>& inv = f.inverse_table();
  i64 count = 0;
  for (u32 x = 1; x < f.size(); ++x)
    if (f.trace_bit(f.mul(b, x)) == 0 && f.trace_bit(f.mul(c, inv[x])) == 1) ++count;
  return count;
}

bool lemma2_positive_all(const Field& f) {
  const u32 size = f.size();
  const u32 nw = std::max(1u, size >> 6);
  const std::vector<u64> tb = inverse_trace_tables(f, nw);
  const u64 x0_mask = ~1ULL;
  for (u32 b = 1; b < size; ++b) {
    const u32 mb = f.tr_form_mask(b);
    for (u32 c = 1; c < size; ++c) {
      const u64* tbw = tb.data() + static_cast<std::size_t>(c) * nw;
      i64 count = 0;
      for (u32 w = 0; w < nw; ++w) {
        u64 word = ~kernels::linear_form_word(mb, w) & tbw[w];
        if (w == 0) word &= x0_mask;
        count += __builtin_popcountll(word);
      }
      if (count == 0) return false;
    }
  }
  return true;
}

}  // namespace nega

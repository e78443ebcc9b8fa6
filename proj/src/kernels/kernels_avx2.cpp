// AVX2 variants of the transform and balance kernels. Compiled with -mavx2
// and selected at runtime; must match the scalar reference bit for bit.

#include "kernels_internal.hpp"

#include <immintrin.h>

#include <vector>

namespace nega::kernels::detail {

namespace {

inline __m256i popcount256(__m256i v) {
  const __m256i lut =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i cnt =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

inline __m256i delta_swap256(__m256i w, int shift, u64 mask) {
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  return _mm256_or_si256(_mm256_and_si256(_mm256_srli_epi64(w, shift), m),
                         _mm256_slli_epi64(_mm256_and_si256(w, m), shift));
}

inline __m256i xor_permute256(__m256i w, u32 lo) {
  if (lo & 1) w = delta_swap256(w, 1, 0x5555555555555555ULL);
  if (lo & 2) w = delta_swap256(w, 2, 0x3333333333333333ULL);
  if (lo & 4) w = delta_swap256(w, 4, 0x0f0f0f0f0f0f0f0fULL);
  if (lo & 8) w = delta_swap256(w, 8, 0x00ff00ff00ff00ffULL);
  if (lo & 16) w = delta_swap256(w, 16, 0x0000ffff0000ffffULL);
  if (lo & 32) {
    const __m256i lo32 = _mm256_srli_epi64(w, 32);
    w = _mm256_or_si256(lo32, _mm256_slli_epi64(w, 32));
  }
  return w;
}

void walsh_avx2(i32* v, int n) {
  const u32 size = 1u << n;
  u32 stride = 1;
  for (; stride < size && stride < 8; stride <<= 1)
    walsh_stage_scalar(v, size, stride);
  for (; stride < size; stride <<= 1)
    for (u32 base = 0; base < size; base += 2 * stride)
      for (u32 t = 0; t < stride; t += 8) {
        i32* p0 = v + base + t;
        i32* p1 = p0 + stride;
        const __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(p0));
        const __m256i b = _mm256_loadu_si256(reinterpret_cast<__m256i*>(p1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p0), _mm256_add_epi32(a, b));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p1), _mm256_sub_epi32(a, b));
      }
}

void nega_avx2(i32* re, i32* im, int n) {
  const u32 size = 1u << n;
  u32 stride = 1;
  for (; stride < size && stride < 8; stride <<= 1)
    nega_stage_scalar(re, im, size, stride);
  for (; stride < size; stride <<= 1)
    for (u32 base = 0; base < size; base += 2 * stride)
      for (u32 t = 0; t < stride; t += 8) {
        const u32 p0 = base + t, p1 = p0 + stride;
        const __m256i ra = _mm256_loadu_si256(reinterpret_cast<__m256i*>(re + p0));
        const __m256i ia = _mm256_loadu_si256(reinterpret_cast<__m256i*>(im + p0));
        const __m256i rb = _mm256_loadu_si256(reinterpret_cast<__m256i*>(re + p1));
        const __m256i ib = _mm256_loadu_si256(reinterpret_cast<__m256i*>(im + p1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(re + p0), _mm256_sub_epi32(ra, ib));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(im + p0), _mm256_add_epi32(ia, rb));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(re + p1), _mm256_add_epi32(ra, ib));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(im + p1), _mm256_sub_epi32(ia, rb));
      }
}

// Lane l of a 4-word chunk at c must read permuted word 4*(c ^ hi/4) + (l ^ P),
// P = hi & 3: a 32-byte load at the xored chunk plus a 64-bit lane shuffle.
template <int P>
i64 count_xor3(const u64* f, const u64* g, const u64* l, u32 nw, u32 hi) {
  const u32 hi4 = hi >> 2;
  __m256i acc = _mm256_setzero_si256();
  for (u32 c = 0; c < nw / 4; ++c) {
    __m256i gv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(g + 4 * (c ^ hi4)));
    if constexpr (P == 1) gv = _mm256_permute4x64_epi64(gv, 0xB1);
    if constexpr (P == 2) gv = _mm256_permute4x64_epi64(gv, 0x4E);
    if constexpr (P == 3) gv = _mm256_permute4x64_epi64(gv, 0x1B);
    const __m256i fv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(f + 4 * c));
    const __m256i lv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(l + 4 * c));
    acc = _mm256_add_epi64(acc, popcount256(_mm256_xor_si256(_mm256_xor_si256(fv, gv), lv)));
  }
  alignas(32) u64 lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<i64>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

u32 first_unbalanced_avx2(const u64* table, int n, const u32* unit_masks) {
  if (n <= 7) return scalar_ops.unbalanced(table, n, unit_masks);  // < 4 words
  const u32 nw = (1u << n) >> 6;
  const i64 half = 1 << (n - 1);
  thread_local std::vector<u64> perm, lin;
  perm.resize(nw);
  lin.resize(nw);
  for (u32 lo = 0; lo < 64; ++lo) {
    for (u32 b = 0; b < nw; b += 4) {
      const __m256i w = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table + b));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(perm.data() + b),
                          xor_permute256(w, lo));
    }
    for (u32 hi = 0; hi < nw; ++hi) {
      const u32 a = (hi << 6) | lo;
      if (a == 0) continue;
      const u32 mask = derivative_mask(unit_masks, a);
      const u64 pat = linear_form_pattern(mask & 63u);
      const u32 mask_hi = mask >> 6;
      for (u32 b = 0; b < nw; ++b)
        lin[b] = Field::parity(mask_hi & b) ? ~pat : pat;
      i64 count;
      switch (hi & 3) {
        case 0: count = count_xor3<0>(table, perm.data(), lin.data(), nw, hi); break;
        case 1: count = count_xor3<1>(table, perm.data(), lin.data(), nw, hi); break;
        case 2: count = count_xor3<2>(table, perm.data(), lin.data(), nw, hi); break;
        default: count = count_xor3<3>(table, perm.data(), lin.data(), nw, hi); break;
      }
      if (count != half) return a;
    }
  }
  return 0;
}

}  // namespace

const Ops avx2_ops = {&walsh_avx2, &nega_avx2, &first_unbalanced_avx2};

}  // namespace nega::kernels::detail

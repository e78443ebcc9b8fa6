#include "kernels_internal.hpp"

#include <vector>

namespace nega::kernels {

namespace detail {

void walsh_stage_scalar(i32* v, u32 size, u32 stride) {
  for (u32 base = 0; base < size; base += 2 * stride)
    for (u32 t = 0; t < stride; ++t) {
      const i32 a = v[base + t], b = v[base + stride + t];
      v[base + t] = a + b;
      v[base + stride + t] = a - b;
    }
}

void nega_stage_scalar(i32* re, i32* im, u32 size, u32 stride) {
  for (u32 base = 0; base < size; base += 2 * stride)
    for (u32 t = 0; t < stride; ++t) {
      const u32 p0 = base + t, p1 = base + stride + t;
      const i32 ra = re[p0], ia = im[p0], rb = re[p1], ib = im[p1];
      re[p0] = ra - ib;  // A + iB
      im[p0] = ia + rb;
      re[p1] = ra + ib;  // A - iB
      im[p1] = ia - rb;
    }
}

namespace {

void walsh_scalar(i32* v, int n) {
  const u32 size = 1u << n;
  for (u32 stride = 1; stride < size; stride <<= 1)
    walsh_stage_scalar(v, size, stride);
}

void nega_scalar(i32* re, i32* im, int n) {
  const u32 size = 1u << n;
  for (u32 stride = 1; stride < size; stride <<= 1)
    nega_stage_scalar(re, im, size, stride);
}

}  // namespace

u32 first_unbalanced_small(const u64* table, int n, const u32* unit_masks) {
  const u32 size = 1u << n;
  const u64 valid = size == 64 ? ~0ULL : (1ULL << size) - 1;
  const i64 half = size / 2;
  const u64 f = table[0];
  for (u32 a = 1; a < size; ++a) {
    const u64 g = xor_index_permute(f, a);
    const u64 lw = linear_form_pattern(derivative_mask(unit_masks, a));
    if (__builtin_popcountll((f ^ g ^ lw) & valid) != half) return a;
  }
  return 0;
}

namespace {

u32 first_unbalanced_scalar(const u64* table, int n, const u32* unit_masks) {
  if (n <= 6) return first_unbalanced_small(table, n, unit_masks);
  const u32 size = 1u << n;
  const u32 nw = size >> 6;
  const i64 half = size / 2;
  thread_local std::vector<u64> perm;
  perm.resize(nw);
  for (u32 lo = 0; lo < 64; ++lo) {
    for (u32 b = 0; b < nw; ++b) perm[b] = xor_index_permute(table[b], lo);
    for (u32 hi = 0; hi < nw; ++hi) {
      const u32 a = (hi << 6) | lo;
      if (a == 0) continue;
      const u32 mask = derivative_mask(unit_masks, a);
      const u64 pat = linear_form_pattern(mask & 63u);
      const u32 mask_hi = mask >> 6;
      i64 count = 0;
      for (u32 b = 0; b < nw; ++b) {
        const u64 lw = Field::parity(mask_hi & b) ? ~pat : pat;
        count += __builtin_popcountll(table[b] ^ perm[b ^ hi] ^ lw);
      }
      if (count != half) return a;
    }
  }
  return 0;
}

}  // namespace

const Ops scalar_ops = {&walsh_scalar, &nega_scalar, &first_unbalanced_scalar};

namespace {

const Ops* resolve_auto() {
#ifdef NEGA_HAVE_AVX2
  if (avx2_available()) return &avx2_ops;
#endif
  return &scalar_ops;
}

// Auto resolution happens through a magic static so a first use from
// concurrent worker threads is safe; the override is test-only and documented
// as not thread-safe against running kernels.
const Ops* g_override = nullptr;

const Ops* auto_ops() {
  static const Ops* const resolved = resolve_auto();
  return resolved;
}

const Ops* active() { return g_override ? g_override : auto_ops(); }

}  // namespace

}  // namespace detail

bool avx2_available() {
#if defined(NEGA_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

void set_backend(Backend b) {
  using namespace detail;
  switch (b) {
    case Backend::Auto:
      g_override = nullptr;
      return;
    case Backend::Scalar:
      g_override = &scalar_ops;
      return;
    case Backend::Avx2:
#ifdef NEGA_HAVE_AVX2
      if (avx2_available()) {
        g_override = &avx2_ops;
        return;
      }
#endif
      throw std::invalid_argument("kernels: AVX2 backend unavailable");
  }
  throw std::invalid_argument("kernels: unknown backend");
}

const char* active_backend_name() {
  return detail::active() == &detail::scalar_ops ? "scalar" : "avx2";
}

void walsh_inplace(i32* v, int n) { detail::active()->walsh(v, n); }

void nega_inplace(i32* re, i32* im, int n) { detail::active()->nega(re, im, n); }

u32 first_unbalanced(const u64* table, int n, const u32* unit_masks) {
  return detail::active()->unbalanced(table, n, unit_masks);
}

}  // namespace nega::kernels

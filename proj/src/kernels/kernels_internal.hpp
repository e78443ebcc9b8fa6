#pragma once

#include "nega/kernels.hpp"

namespace nega::kernels::detail {

struct Ops {
  void (*walsh)(i32*, int);
  void (*nega)(i32*, i32*, int);
  u32 (*unbalanced)(const u64*, int, const u32*);
};

extern const Ops scalar_ops;
#ifdef NEGA_HAVE_AVX2
extern const Ops avx2_ops;
#endif

// Scalar butterfly stages, also used by SIMD variants for short strides.
void walsh_stage_scalar(i32* v, u32 size, u32 stride);
void nega_stage_scalar(i32* re, i32* im, u32 size, u32 stride);

// Shared single-word path of first_unbalanced for n <= 6.
u32 first_unbalanced_small(const u64* table, int n, const u32* unit_masks);

inline u32 derivative_mask(const u32* unit_masks, u32 a) {
  u32 m = 0;
  while (a) {
    m ^= unit_masks[__builtin_ctz(a)];
    a &= a - 1;
  }
  return m;
}

}  // namespace nega::kernels::detail

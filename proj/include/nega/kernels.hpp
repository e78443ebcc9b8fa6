#pragma once

#include "nega/field.hpp"

namespace nega::kernels {

enum class Backend { Auto, Scalar, Avx2 };

bool avx2_available();
/// Select the kernel implementations. Auto picks the best available backend.
/// Throws std::invalid_argument if the requested backend is unsupported.
/// Not safe to call while kernels are running on other threads.
void set_backend(Backend b);
const char* active_backend_name();

/// In-place Walsh-Hadamard butterfly over 2^n signed integer lanes.
void walsh_inplace(i32* v, int n);

/// In-place nega-Hadamard butterfly over split re/im Gaussian-integer lanes:
/// per stage, (A, B) -> (A + iB, A - iB).
void nega_inplace(i32* re, i32* im, int n);

/// First nonzero a for which x -> f(x) ^ f(x XOR a) ^ parity(mask(a) & x) is
/// unbalanced over all 2^n indices x, or 0 when every nonzero a is balanced.
/// mask(a) = XOR of unit_masks[j] over the set bits j of a. `table` holds 2^n
/// packed bits, 64 per word, index bit order LSB-first. The scan order is
/// fixed, so the returned witness is deterministic (but not the minimal a).
u32 first_unbalanced(const u64* table, int n, const u32* unit_masks);

// --- bit-packed word helpers (shared by scalar and SIMD paths) ---

/// kIndexBitPattern[t] has bit i set iff bit t of i is set, i in [0, 64).
constexpr u64 kIndexBitPattern[6] = {
    0xaaaaaaaaaaaaaaaaULL, 0xccccccccccccccccULL, 0xf0f0f0f0f0f0f0f0ULL,
    0xff00ff00ff00ff00ULL, 0xffff0000ffff0000ULL, 0xffffffff00000000ULL,
};

/// Word whose bit i equals parity(mask6 & i), i in [0, 64); mask6 < 64.
inline u64 linear_form_pattern(u32 mask6) {
  u64 w = 0;
  for (int t = 0; t < 6; ++t)
    if ((mask6 >> t) & 1) w ^= kIndexBitPattern[t];
  return w;
}

/// Word `block` of the packed table of the linear form x -> parity(mask & x):
/// bit t = parity(mask & (64*block + t)).
inline u64 linear_form_word(u32 mask, u32 block) {
  u64 w = linear_form_pattern(mask & 63u);
  if (Field::parity((mask >> 6) & block)) w = ~w;
  return w;
}

/// Permute the 64 index bits of w by t -> t XOR lo (delta swaps per set bit).
inline u64 xor_index_permute(u64 w, u32 lo) {
  if (lo & 1) w = ((w >> 1) & 0x5555555555555555ULL) | ((w & 0x5555555555555555ULL) << 1);
  if (lo & 2) w = ((w >> 2) & 0x3333333333333333ULL) | ((w & 0x3333333333333333ULL) << 2);
  if (lo & 4) w = ((w >> 4) & 0x0f0f0f0f0f0f0f0fULL) | ((w & 0x0f0f0f0f0f0f0f0fULL) << 4);
  if (lo & 8) w = ((w >> 8) & 0x00ff00ff00ff00ffULL) | ((w & 0x00ff00ff00ff00ffULL) << 8);
  if (lo & 16) w = ((w >> 16) & 0x0000ffff0000ffffULL) | ((w & 0x0000ffff0000ffffULL) << 16);
  if (lo & 32) w = (w >> 32) | (w << 32);
  return w;
}

}  // namespace nega::kernels

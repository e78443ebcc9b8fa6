#pragma once

// Independent brute-force oracles for the test suites. These deliberately
// avoid the library's butterfly/bit-packed paths: everything here is the
// O(4^n)-style definition, evaluated directly.

#include <random>
#include <vector>

#include "nega/boolfun.hpp"
#include "nega/field.hpp"

namespace testutil {

using nega::i32;
using nega::i64;
using nega::u32;
using nega::u64;

inline int dot(u32 a, u32 x) { return __builtin_parity(a & x); }

inline std::vector<i32> naive_walsh(const nega::TruthTable& tt) {
  const u32 size = tt.size();
  std::vector<i32> w(size);
  for (u32 a = 0; a < size; ++a) {
    i32 s = 0;
    for (u32 x = 0; x < size; ++x) s += ((tt.get(x) ^ dot(a, x)) & 1) ? -1 : 1;
    w[a] = s;
  }
  return w;
}

inline std::vector<nega::GaussianInt> naive_nega(const nega::TruthTable& tt) {
  const u32 size = tt.size();
  std::vector<nega::GaussianInt> out(size);
  for (u32 a = 0; a < size; ++a) {
    i32 re = 0, im = 0;
    for (u32 x = 0; x < size; ++x) {
      const i32 sign = ((tt.get(x) ^ dot(a, x)) & 1) ? -1 : 1;
      switch (__builtin_popcount(x) & 3) {  // i^wt(x)
        case 0: re += sign; break;
        case 1: im += sign; break;
        case 2: re -= sign; break;
        case 3: im -= sign; break;
      }
    }
    out[a] = {re, im};
  }
  return out;
}

// Theorem-1 criterion straight from the definition, with field arithmetic.
template <class Fn>
bool naive_negabent_criterion(const nega::Field& f, Fn&& fn) {
  for (u32 a = 1; a < f.size(); ++a) {
    i64 sum = 0;
    for (u32 x = 0; x < f.size(); ++x) {
      const int e = fn(x) ^ fn(x ^ a) ^ f.trace_bit(f.mul(a, x));
      sum += e ? -1 : 1;
    }
    if (sum != 0) return false;
  }
  return true;
}

inline nega::TruthTable random_table(int n, std::mt19937_64& rng) {
  nega::TruthTable tt(n);
  for (u32 i = 0; i < tt.size(); ++i) tt.set(i, static_cast<int>(rng() & 1));
  return tt;
}

// exhaustive permutation check of a map on all field points
template <class Fn>
bool is_bijection(const nega::Field& f, Fn&& fn) {
  std::vector<char> seen(f.size(), 0);
  for (u32 x = 0; x < f.size(); ++x) {
    const u32 y = fn(x);
    if (y >= f.size() || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

}  // namespace testutil

#pragma once

#include "nega/field.hpp"

namespace nega {

/// K_n(a, b) = sum over nonzero x of (-1)^Tr(ax + b/x), by direct enumeration
/// of the 2^n - 1 terms. K(0, 0) = 2^n - 1.
i64 kloosterman(const Field& f, u32 a, u32 b);

/// Weil bound |K| <= 2 sqrt(2^n) for every (a, b) != (0, 0), checked with the
/// exact integer comparison K^2 <= 2^(n+2) over all pairs.
bool weil_bound_holds(const Field& f);

/// A = #{x != 0 : Tr(bx) = 0 and Tr(c/x) = 1}, by enumeration. b, c != 0.
i64 lemma2_count(const Field& f, u32 b, u32 c);

/// A > 0 for every pair b, c != 0 (the k > 2 positivity claim's content at
/// the given field size).
bool lemma2_positive_all(const Field& f);

}  // namespace nega

#pragma once

#include <functional>
#include <string>

#include "nega/field.hpp"

namespace nega {

/// The implemented construction families:
///   Thm2      f = Tr_1^k(lambda x^(2^k+1)) + Tr(ux)Tr(vx), n = 2k, lambda in F_{2^k}
///   Thm4      f = Tr(ux)Tr(vx), any n
///   Thm5      f = Tr(x^(2^k+1)) + Tr(x)Tr(vx), n even, gcd(n,3k) = gcd(n,k)
///   Thm6      f = Tr(lambda x^(2^k+1)) + Tr(x)Tr(vx), n = rk even, lambda in F_{2^k}*,
///             gcd(lambda + x + lambda x^2, x^r - 1) = 1
///   MonomialD f = Tr(lambda x^(2^k+3)), n = 2k, k odd >= 3
///   Niho      f = Tr(alpha x^d), d = r(2^m - 1) + 1, n = 2m
enum class Family { Thm2, Thm4, Thm5, Thm6, MonomialD, Niho };

const char* family_name(Family f);
Family family_from_name(const std::string& s);  // throws on unknown id

struct FamilyInstance {
  Family family;
  int n = 0;
  u32 lambda = 0;
  u32 u = 0;
  u32 v = 0;
  u32 alpha = 0;
  int k = 0;
  int r = 0;

  std::string param_string() const;  // deterministic hex encoding of the parameters
};

enum class VerdictStatus { Negabent, NotNegabent, SufficientOnlyUnknown };

/// Closed-form verdict plus the clause that decided it. SufficientOnlyUnknown
/// appears only for the one-directional families (Thm5, Thm6).
struct Verdict {
  VerdictStatus status;
  std::string clause;
};

const char* verdict_name(VerdictStatus s);

/// Throws std::invalid_argument when the instance violates its family's
/// hypotheses (wrong parity, lambda outside the subfield, parameter ranges).
void validate(const FamilyInstance& inst, const Field& f);

/// Pointwise evaluator of the instance's function over element encodings.
std::function<int(u32)> build_function(const FamilyInstance& inst, const Field& f);

Verdict predict_negabent(const FamilyInstance& inst, const Field& f);

/// Bent test for the Thm2 shape: Tr(lambda^-1 u^(2^k) v) == 0. lambda != 0.
bool predict_bent(const Field& f, u32 lambda, u32 u, u32 v);

/// Bent-negabent for the Thm2 shape (conjunction clauses). lambda != 0.
bool predict_bent_negabent(const Field& f, u32 lambda, u32 u, u32 v);

/// Number of ordered pairs (u, v), u != v, both nonzero, making the Thm2
/// function negabent: (2^(n-1) - 2)(2^n - 1) for lambda != 1; 6 / 96 / 0 for
/// lambda = 1 with k = 1 / 2 / > 2.
u64 corollary1_count(const Field& f, u32 lambda);

u64 niho_exponent(int r, int m);  // r(2^m - 1) + 1, 1 <= r <= 2^m
/// d(r1), d(r2) lie in one cyclotomic coset mod 2^(2m) - 1 iff
/// r1 = r2 or r1 + r2 = 1 (mod 2^m + 1).
bool niho_coset_equivalent(int r1, int r2, int m);

/// Negabent classification conjectured for 2 <= r <= 2^(m-1) + 1:
/// (m odd, r = 2^(m-2) + 1, alpha in F_2) or
/// (r = 2^(m-1) + 1, alpha + alpha^(2^m) != 1).
bool conjecture1_predicate(int r, u32 alpha, int m, const Field& f);

/// Multiplicative inverse mod m (throws when gcd(a, m) != 1).
u64 mod_inverse(u64 a, u64 m);

}  // namespace nega

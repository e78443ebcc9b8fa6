#pragma once

#include <utility>
#include <vector>

#include "nega/field.hpp"

namespace nega {

/// Dense polynomial over a Field, coefficients lowest degree first, no
/// trailing zeros (the zero polynomial has an empty coefficient vector).
class Poly {
 public:
  Poly(const Field& f, std::vector<u32> coeffs);
  static Poly zero(const Field& f) { return Poly(f, {}); }
  static Poly one(const Field& f) { return Poly(f, {1}); }
  static Poly x_pow_plus_one(const Field& f, int r);  // x^r + 1

  const Field& field() const { return *field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  u32 coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  const std::vector<u32>& coeffs() const { return coeffs_; }

  Poly monic() const;
  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const;

  /// (quotient, remainder) with deg r < deg b. Throws on division by zero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

 private:
  const Field* field_;
  std::vector<u32> coeffs_;
};

/// Monic gcd by Euclid's algorithm. Throws std::invalid_argument when both
/// inputs are zero.
Poly poly_gcd(Poly a, Poly b);

/// L(x) = sum_i coeffs[i] * x^(q^i) with q = 2^k, acting on the given field
/// F_{2^n}; requires k | n and coefficients in F_{2^k}. Exponent indices are
/// folded mod m = n/k (x^(q^m) = x on the field).
class LinearizedPoly {
 public:
  LinearizedPoly(const Field& f, int k, const std::vector<u32>& coeffs);

  const Field& field() const { return *field_; }
  int k() const { return k_; }
  int m() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<u32>& coeffs() const { return coeffs_; }

  u32 eval(u32 x) const;
  /// Conventional q-associate sum_i coeffs[i] x^i.
  Poly associate() const;

 private:
  const Field* field_;
  int k_;
  std::vector<u32> coeffs_;  // length m = n/k after folding
};

/// gcd(associate, x^m - 1) == 1, the linearized-permutation criterion.
bool is_linearized_permutation(const LinearizedPoly& L);

/// Additive map on F_{2^n} as its column action on the polynomial basis.
struct LinearMap {
  int n = 0;
  std::vector<u32> cols;  // cols[j] = map(e_j)

  u32 apply(u32 x) const {
    u32 y = 0;
    while (x) {
      y ^= cols[static_cast<std::size_t>(__builtin_ctz(x))];
      x &= x - 1;
    }
    return y;
  }
  LinearMap compose(const LinearMap& inner) const;  // this(inner(x))
  bool operator==(const LinearMap&) const = default;

  static LinearMap identity(int n);
};

LinearMap to_linear_map(const LinearizedPoly& L);
LinearMap frobenius_map(const Field& f, int k);

/// Inverse map via GF(2) Gaussian elimination. Throws std::invalid_argument
/// when L is not a permutation.
LinearMap compositional_inverse(const LinearizedPoly& L);
LinearMap invert_linear_map(const LinearMap& m);  // throws if singular

/// x + x^(2^k) + x^(2^(2k)) permutes F_{2^n} iff gcd(n,3k) == gcd(n,k).
bool lemma4_condition(int n, int k);

/// lambda*x + x^(2^k) + lambda*x^(2^(2k)) permutes F_{2^(rk)} iff
/// gcd(lambda + x + lambda x^2, x^r - 1) == 1 over the field of lambda
/// (any field containing lambda gives the same verdict). lambda != 0.
bool lemma5_condition(const Field& f, u32 lambda, int r);

/// Builders for the two trinomial shapes above.
LinearizedPoly trinomial_frobenius(const Field& f, int k);               // lemma 4 shape
LinearizedPoly trinomial_weighted(const Field& f, int k, u32 lambda_in_subfield);  // lemma 5 shape

}  // namespace nega

#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace nega {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;

/// Dense GF(2)[x] polynomials as bitmasks, bit i = coefficient of x^i.
namespace gf2x {

int degree(u64 p);  // -1 for the zero polynomial
u64 mod(u64 a, u64 m);
u64 mulmod(u64 a, u64 b, u64 m);
u64 gcd(u64 a, u64 b);
bool is_irreducible(u64 p);
/// Smallest (msb-first lexicographic, equivalently integer order) irreducible
/// polynomial of degree n over GF(2).
u64 least_irreducible(int n);

}  // namespace gf2x

class Field;

/// Checked value layer over Field's raw element ops. Elements of two Field
/// instances mix only when the instances agree on (n, modulus).
struct FieldElt {
  u32 bits = 0;
  const Field* field = nullptr;

  FieldElt() = default;
  FieldElt(const Field& f, u32 b);

  FieldElt operator+(FieldElt o) const;
  FieldElt operator*(FieldElt o) const;
  FieldElt operator/(FieldElt o) const;
  FieldElt inv() const;
  FieldElt pow(u64 e) const;
  FieldElt frob(int j) const;
  FieldElt trace(int k) const;
  int trace_bit() const;
  bool operator==(const FieldElt& o) const;
  bool operator!=(const FieldElt& o) const { return !(*this == o); }
};

/// Basis b_0..b_{n-1} of GF(2^n) over GF(2) with Tr(b_i b_j) = delta_ij.
struct SelfDualBasis {
  std::vector<u32> elts;
};

/// GF(2^n), 1 <= n <= 20. Elements are n coefficient bits in the polynomial
/// basis, bit 0 = constant term; the integer value of the bit pattern is the
/// element's encoding everywhere (tables, CLI, files). Immutable after
/// construction; all operations are pure and safe to call concurrently.
class Field {
 public:
  explicit Field(int n);      // default (shipped-table) modulus for n
  Field(int n, u32 modulus);  // explicit modulus, validated

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  int n() const { return n_; }
  u32 modulus() const { return modulus_; }
  u32 size() const { return 1u << n_; }
  u32 mask() const { return size() - 1u; }

  static u32 default_modulus(int n);

  u32 add(u32 a, u32 b) const { return a ^ b; }
  u32 mul(u32 a, u32 b) const;
  u32 sqr(u32 a) const { return mul(a, a); }
  u32 inv(u32 a) const;           // throws std::domain_error on 0
  u32 pow(u32 a, u64 e) const;    // 0^0 = 1; exponent mod 2^n-1 for a != 0
  u32 frob(u32 a, int j) const;   // a^(2^j), j reduced mod n
  u32 trace(u32 a, int k) const;  // Tr_k^n(a), requires k | n
  int trace_bit(u32 a) const { return parity(tr_mask_ & a); }  // Tr_1^n

  /// Absolute trace of the subfield F_{2^k}: sum_{i<k} a^(2^i). Requires
  /// k | n and a in F_{2^k}; the result is 0 or 1.
  int subfield_trace_bit(u32 a, int k) const;
  bool in_subfield(u32 a, int k) const;  // requires k | n
  std::vector<u32> subfield(int k) const;  // ascending encodings, 2^k values

  /// m with Tr(a*x) = parity(m & x) for all x (the trace form as a linear
  /// functional of x's coordinate bits).
  u32 tr_form_mask(u32 a) const;
  const std::vector<u32>& tr_unit_masks() const { return tr_unit_masks_; }

  const SelfDualBasis& self_dual_basis() const;   // lazy, cached
  const std::vector<u32>& inverse_table() const;  // lazy, cached
  u32 primitive_element() const;                  // lazy, cached

  bool compatible(const Field& o) const {
    return n_ == o.n_ && modulus_ == o.modulus_;
  }

  static int parity(u32 v) { return __builtin_parity(v); }

 private:
  void check_divisor(int k) const;

  int n_;
  u32 modulus_;
  u32 tr_mask_ = 0;
  std::vector<u32> tr_unit_masks_;

  mutable std::once_flag basis_once_, inv_once_, gen_once_;
  mutable SelfDualBasis basis_;
  mutable std::vector<u32> inv_table_;
  mutable u32 generator_ = 0;
};

/// Deterministic self-dual basis via symmetric congruence reduction of the
/// trace Gram matrix, lowest-index pivoting.
SelfDualBasis compute_self_dual_basis(const Field& f);

/// Coordinates against a self-dual basis: bit j = Tr(a * b_j).
u32 coords(const Field& f, const SelfDualBasis& b, u32 a);
u32 from_coords(const Field& f, const SelfDualBasis& b, u32 c);

}  // namespace nega

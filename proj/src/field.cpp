#include "nega/field.hpp"

#include <algorithm>

namespace nega {

namespace gf2x {

int degree(u64 p) { return p ? 63 - __builtin_clzll(p) : -1; }

u64 mod(u64 a, u64 m) {
  const int dm = degree(m);
  for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
  return a;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  u64 acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    a <<= 1;
    b >>= 1;
  }
  return mod(acc, m);
}

u64 gcd(u64 a, u64 b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

// x^(2^e) mod m by repeated squaring of the residue.
u64 x_pow_pow2_mod(int e, u64 m) {
  u64 t = mod(2, m);  // the polynomial x
  for (int i = 0; i < e; ++i) t = mulmod(t, t, m);
  return t;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

bool is_irreducible(u64 p) {
  const int n = degree(p);
  if (n <= 0) return false;
  // Rabin: x^(2^n) == x mod p, and gcd(x^(2^(n/q)) - x, p) = 1 for primes q|n.
  if (x_pow_pow2_mod(n, p) != mod(2, p)) return false;
  for (int q : prime_divisors(n)) {
    u64 u = x_pow_pow2_mod(n / q, p) ^ mod(2, p);
    if (gcd(u, p) != 1) return false;
  }
  return true;
}

u64 least_irreducible(int n) {
  // Constant term must be 1 (else divisible by x), so scan odd candidates.
  for (u64 v = (u64(1) << n) | 1; v < (u64(1) << (n + 1)); v += 2)
    if (is_irreducible(v)) return v;
  throw std::logic_error("gf2x: no irreducible polynomial found");
}

}  // namespace gf2x

u32 Field::default_modulus(int n) {
  if (n < 1 || n > 20) throw std::invalid_argument("Field: n must be in [1, 20]");
  return static_cast<u32>(gf2x::least_irreducible(n));
}

Field::Field(int n) : Field(n, default_modulus(n)) {}

Field::Field(int n, u32 modulus) : n_(n), modulus_(modulus) {
  if (n < 1 || n > 20) throw std::invalid_argument("Field: n must be in [1, 20]");
  if (gf2x::degree(modulus) != n)
    throw std::invalid_argument("Field: modulus degree must equal n");
  if ((modulus & 1) == 0)
    throw std::invalid_argument("Field: modulus constant coefficient must be 1");
  if (!gf2x::is_irreducible(modulus))
    throw std::invalid_argument("Field: modulus is reducible");

  // Tr(x) is linear: record Tr on the unit vectors as a parity mask.
  for (int j = 0; j < n_; ++j) {
    u32 cur = 1u << j, acc = cur;
    for (int i = 1; i < n_; ++i) {
      cur = mul(cur, cur);
      acc ^= cur;
    }
    if (acc > 1) throw std::logic_error("Field: trace escaped GF(2)");
    tr_mask_ |= acc << j;
  }
  tr_unit_masks_.resize(n_);
  for (int i = 0; i < n_; ++i) {
    u32 m = 0;
    for (int j = 0; j < n_; ++j)
      m |= static_cast<u32>(trace_bit(mul(1u << i, 1u << j))) << j;
    tr_unit_masks_[i] = m;
  }
}

u32 Field::mul(u32 a, u32 b) const {
  u64 acc = 0, aa = a;
  while (b) {
    if (b & 1) acc ^= aa;
    aa <<= 1;
    b >>= 1;
  }
  for (int d = 2 * n_ - 2; d >= n_; --d)
    if ((acc >> d) & 1) acc ^= static_cast<u64>(modulus_) << (d - n_);
  return static_cast<u32>(acc);
}

u32 Field::pow(u32 a, u64 e) const {
  if (a == 0) return e == 0 ? 1u : 0u;
  const u64 N = size() - 1;
  e %= N;
  u32 r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

u32 Field::inv(u32 a) const {
  if (a == 0) throw std::domain_error("Field: inversion of zero");
  return pow(a, size() - 2u);
}

u32 Field::frob(u32 a, int j) const {
  if (j < 0) throw std::invalid_argument("Field: frobenius exponent must be >= 0");
  j %= n_;
  for (int i = 0; i < j; ++i) a = mul(a, a);
  return a;
}

u32 Field::trace(u32 a, int k) const {
  check_divisor(k);
  u32 acc = a, cur = a;
  for (int i = 1; i < n_ / k; ++i) {
    cur = frob(cur, k);
    acc ^= cur;
  }
  return acc;
}

void Field::check_divisor(int k) const {
  if (k < 1 || n_ % k != 0)
    throw std::invalid_argument("Field: k must be a positive divisor of n");
}

bool Field::in_subfield(u32 a, int k) const {
  check_divisor(k);
  return frob(a, k) == a;  // k == n reduces to frob(a, 0) == a
}

int Field::subfield_trace_bit(u32 a, int k) const {
  if (!in_subfield(a, k))
    throw std::invalid_argument("Field: element not in the requested subfield");
  u32 acc = 0, cur = a;
  for (int i = 0; i < k; ++i) {
    acc ^= cur;
    cur = mul(cur, cur);
  }
  if (acc > 1) throw std::logic_error("Field: subfield trace escaped GF(2)");
  return static_cast<int>(acc);
}

std::vector<u32> Field::subfield(int k) const {
  check_divisor(k);
  std::vector<u32> out;
  out.reserve(1u << k);
  for (u32 a = 0; a < size(); ++a)
    if (in_subfield(a, k)) out.push_back(a);
  if (out.size() != (1u << k))
    throw std::logic_error("Field: subfield enumeration size mismatch");
  return out;
}

u32 Field::tr_form_mask(u32 a) const {
  u32 m = 0;
  while (a) {
    const int i = __builtin_ctz(a);
    m ^= tr_unit_masks_[i];
    a &= a - 1;
  }
  return m;
}

const SelfDualBasis& Field::self_dual_basis() const {
  std::call_once(basis_once_, [this] { basis_ = compute_self_dual_basis(*this); });
  return basis_;
}

u32 Field::primitive_element() const {
  std::call_once(gen_once_, [this] {
    if (n_ == 1) {
      generator_ = 1;
      return;
    }
    const u32 N = size() - 1;
    std::vector<int> ps;
    {
      u32 m = N;
      for (u32 p = 2; p * p <= m; ++p)
        if (m % p == 0) {
          ps.push_back(static_cast<int>(p));
          while (m % p == 0) m /= p;
        }
      if (m > 1) ps.push_back(static_cast<int>(m));
    }
    for (u32 g = 2; g < size(); ++g) {
      bool ok = true;
      for (int p : ps)
        if (pow(g, N / static_cast<u32>(p)) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        generator_ = g;
        return;
      }
    }
    throw std::logic_error("Field: no primitive element found");
  });
  return generator_;
}

const std::vector<u32>& Field::inverse_table() const {
  std::call_once(inv_once_, [this] {
    const u32 N = size() - 1;
    const u32 g = primitive_element();
    std::vector<u32> exp(N);
    exp[0] = 1;
    for (u32 i = 1; i < N; ++i) exp[i] = mul(exp[i - 1], g);
    inv_table_.assign(size(), 0);
    for (u32 i = 0; i < N; ++i) inv_table_[exp[i]] = exp[(N - i) % N];
  });
  return inv_table_;
}

SelfDualBasis compute_self_dual_basis(const Field& f) {
  const int n = f.n();
  std::vector<u32> b(n);
  for (int j = 0; j < n; ++j) b[j] = 1u << j;
  auto gram = [&](u32 x, u32 y) { return f.trace_bit(f.mul(x, y)); };

  for (int i = 0; i < n;) {
    int p = -1;
    for (int j = i; j < n; ++j)
      if (gram(b[j], b[j])) {
        p = j;
        break;
      }
    if (p < 0) {
      // Residual form is alternating. Mix the last finished unit vector e with
      // the first residual hyperbolic pair (x, y): {e+x, e+y, e+x+y} is an
      // orthonormal triple spanning the same space.
      if (i == 0) throw std::logic_error("self_dual_basis: alternating at start");
      int jx = -1, jy = -1;
      for (int s = i; s < n && jx < 0; ++s)
        for (int t = s + 1; t < n; ++t)
          if (gram(b[s], b[t])) {
            jx = s;
            jy = t;
            break;
          }
      if (jx < 0) throw std::logic_error("self_dual_basis: degenerate residual");
      const u32 e = b[i - 1], x = b[jx], y = b[jy];
      b[i - 1] = e ^ x;
      b[jx] = e ^ y;
      b[jy] = e ^ x ^ y;
      for (int t = i; t < n; ++t)
        if (t != jx && t != jy && gram(b[t], b[i - 1])) b[t] ^= b[i - 1];
      continue;  // retry this stage; b[jx] now has unit diagonal
    }
    std::swap(b[i], b[p]);
    for (int j = i + 1; j < n; ++j)
      if (gram(b[j], b[i])) b[j] ^= b[i];
    ++i;
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram(b[i], b[j]) != (i == j ? 1 : 0))
        throw std::logic_error("self_dual_basis: Gram matrix is not the identity");
  return SelfDualBasis{std::move(b)};
}

u32 coords(const Field& f, const SelfDualBasis& b, u32 a) {
  u32 c = 0;
  for (std::size_t j = 0; j < b.elts.size(); ++j)
    c |= static_cast<u32>(f.trace_bit(f.mul(a, b.elts[j]))) << j;
  return c;
}

u32 from_coords(const Field&, const SelfDualBasis& b, u32 c) {
  u32 a = 0;
  while (c) {
    const int j = __builtin_ctz(c);
    a ^= b.elts[static_cast<std::size_t>(j)];
    c &= c - 1;
  }
  return a;
}

FieldElt::FieldElt(const Field& f, u32 b) : bits(b & f.mask()), field(&f) {}

namespace {
const Field& common(const FieldElt& a, const FieldElt& b) {
  if (!a.field || !b.field) throw std::invalid_argument("FieldElt: unbound element");
  if (!a.field->compatible(*b.field))
    throw std::invalid_argument("FieldElt: mismatched fields");
  return *a.field;
}
}  // namespace

FieldElt FieldElt::operator+(FieldElt o) const {
  const Field& f = common(*this, o);
  return FieldElt(f, f.add(bits, o.bits));
}
FieldElt FieldElt::operator*(FieldElt o) const {
  const Field& f = common(*this, o);
  return FieldElt(f, f.mul(bits, o.bits));
}
FieldElt FieldElt::operator/(FieldElt o) const {
  const Field& f = common(*this, o);
  return FieldElt(f, f.mul(bits, f.inv(o.bits)));
}
FieldElt FieldElt::inv() const { return FieldElt(*field, field->inv(bits)); }
FieldElt FieldElt::pow(u64 e) const { return FieldElt(*field, field->pow(bits, e)); }
FieldElt FieldElt::frob(int j) const { return FieldElt(*field, field->frob(bits, j)); }
FieldElt FieldElt::trace(int k) const { return FieldElt(*field, field->trace(bits, k)); }
int FieldElt::trace_bit() const { return field->trace_bit(bits); }
bool FieldElt::operator==(const FieldElt& o) const {
  common(*this, o);
  return bits == o.bits;
}

}  // namespace nega

#include "nega/permpoly.hpp"

#include <numeric>

namespace nega {

namespace {
void trim(std::vector<u32>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Poly::Poly(const Field& f, std::vector<u32> coeffs)
    : field_(&f), coeffs_(std::move(coeffs)) {
  for (u32 c : coeffs_)
    if (c >= f.size()) throw std::invalid_argument("Poly: coefficient out of field");
  trim(coeffs_);
}

Poly Poly::x_pow_plus_one(const Field& f, int r) {
  if (r < 1) throw std::invalid_argument("Poly: exponent must be positive");
  std::vector<u32> c(static_cast<std::size_t>(r) + 1, 0);
  c[0] = 1;
  c[static_cast<std::size_t>(r)] = 1;
  return Poly(f, std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const u32 lead_inv = field_->inv(coeffs_.back());
  std::vector<u32> c = coeffs_;
  for (u32& x : c) x = field_->mul(x, lead_inv);
  return Poly(*field_, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  if (!field_->compatible(*o.field_)) throw std::invalid_argument("Poly: mixed fields");
  std::vector<u32> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = coeff(static_cast<int>(i)) ^ o.coeff(static_cast<int>(i));
  return Poly(*field_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (!field_->compatible(*o.field_)) throw std::invalid_argument("Poly: mixed fields");
  if (is_zero() || o.is_zero()) return zero(*field_);
  std::vector<u32> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] ^= field_->mul(coeffs_[i], o.coeffs_[j]);
  return Poly(*field_, std::move(c));
}

bool Poly::operator==(const Poly& o) const {
  return field_->compatible(*o.field_) && coeffs_ == o.coeffs_;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (!a.field_->compatible(*b.field_))
    throw std::invalid_argument("Poly: mixed fields");
  if (b.is_zero()) throw std::invalid_argument("Poly: division by zero");
  const Field& f = *a.field_;
  std::vector<u32> r = a.coeffs_;
  const int db = b.degree();
  if (a.degree() < db) return {zero(f), a};
  std::vector<u32> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const u32 lead_inv = f.inv(b.coeffs_.back());
  for (int d = a.degree(); d >= db; --d) {
    const std::size_t di = static_cast<std::size_t>(d);
    if (di >= r.size() || r[di] == 0) continue;
    const u32 factor = f.mul(r[di], lead_inv);
    q[static_cast<std::size_t>(d - db)] = factor;
    for (int i = 0; i <= db; ++i)
      r[static_cast<std::size_t>(d - db + i)] ^= f.mul(factor, b.coeff(i));
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero())
    throw std::invalid_argument("poly_gcd: both inputs are zero");
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = b;
    b = std::move(r);
  }
  return a.monic();
}

LinearizedPoly::LinearizedPoly(const Field& f, int k, const std::vector<u32>& coeffs)
    : field_(&f), k_(k) {
  if (k < 1 || f.n() % k != 0)
    throw std::invalid_argument("LinearizedPoly: k must be a positive divisor of n");
  const int m = f.n() / k;
  coeffs_.assign(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!f.in_subfield(coeffs[i], k))
      throw std::invalid_argument("LinearizedPoly: coefficient outside F_{2^k}");
    coeffs_[i % static_cast<std::size_t>(m)] ^= coeffs[i];
  }
}

u32 LinearizedPoly::eval(u32 x) const {
  u32 acc = 0, cur = x;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i]) acc ^= field_->mul(coeffs_[i], cur);
    cur = field_->frob(cur, k_);
  }
  return acc;
}

Poly LinearizedPoly::associate() const { return Poly(*field_, coeffs_); }

bool is_linearized_permutation(const LinearizedPoly& L) {
  const Poly assoc = L.associate();
  if (assoc.is_zero()) return false;
  return poly_gcd(assoc, Poly::x_pow_plus_one(L.field(), L.m())).degree() == 0;
}

LinearMap LinearMap::identity(int n) {
  LinearMap m{n, std::vector<u32>(static_cast<std::size_t>(n))};
  for (int j = 0; j < n; ++j) m.cols[static_cast<std::size_t>(j)] = 1u << j;
  return m;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (n != inner.n) throw std::invalid_argument("LinearMap: size mismatch");
  LinearMap out{n, std::vector<u32>(static_cast<std::size_t>(n))};
  for (int j = 0; j < n; ++j)
    out.cols[static_cast<std::size_t>(j)] = apply(inner.cols[static_cast<std::size_t>(j)]);
  return out;
}

LinearMap to_linear_map(const LinearizedPoly& L) {
  LinearMap m{L.field().n(), {}};
  m.cols.resize(static_cast<std::size_t>(m.n));
  for (int j = 0; j < m.n; ++j) m.cols[static_cast<std::size_t>(j)] = L.eval(1u << j);
  return m;
}

LinearMap frobenius_map(const Field& f, int k) {
  LinearMap m{f.n(), {}};
  m.cols.resize(static_cast<std::size_t>(m.n));
  for (int j = 0; j < m.n; ++j) m.cols[static_cast<std::size_t>(j)] = f.frob(1u << j, k);
  return m;
}

LinearMap invert_linear_map(const LinearMap& m) {
  const int n = m.n;
  // rows of [M | I], M's row i = bit i across the columns
  std::vector<u64> rows(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    u64 row = 0;
    for (int j = 0; j < n; ++j)
      row |= static_cast<u64>((m.cols[static_cast<std::size_t>(j)] >> i) & 1) << j;
    rows[static_cast<std::size_t>(i)] = row | (u64(1) << (n + i));
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if ((rows[static_cast<std::size_t>(r)] >> c) & 1) {
        p = r;
        break;
      }
    if (p < 0) throw std::invalid_argument("LinearMap: singular (not a permutation)");
    std::swap(rows[static_cast<std::size_t>(c)], rows[static_cast<std::size_t>(p)]);
    for (int r = 0; r < n; ++r)
      if (r != c && ((rows[static_cast<std::size_t>(r)] >> c) & 1))
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(c)];
  }
  LinearMap inv{n, std::vector<u32>(static_cast<std::size_t>(n))};
  for (int j = 0; j < n; ++j) {
    u32 col = 0;
    for (int i = 0; i < n; ++i)
      col |= static_cast<u32>((rows[static_cast<std::size_t>(i)] >> (n + j)) & 1) << i;
    inv.cols[static_cast<std::size_t>(j)] = col;
  }
  return inv;
}

LinearMap compositional_inverse(const LinearizedPoly& L) {
  if (!is_linearized_permutation(L))
    throw std::invalid_argument("compositional_inverse: not a permutation polynomial");
  return invert_linear_map(to_linear_map(L));
}

bool lemma4_condition(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("lemma4_condition: n, k must be >= 1");
  return std::gcd(n, 3 * k) == std::gcd(n, k);
}

bool lemma5_condition(const Field& f, u32 lambda, int r) {
  if (lambda == 0) throw std::invalid_argument("lemma5_condition: lambda must be nonzero");
  const Poly crit(f, {lambda, 1, lambda});
  return poly_gcd(crit, Poly::x_pow_plus_one(f, r)).degree() == 0;
}

LinearizedPoly trinomial_frobenius(const Field& f, int k) {
  if (k < 1) throw std::invalid_argument("trinomial_frobenius: k must be >= 1");
  std::vector<u32> c(static_cast<std::size_t>(2 * k) + 1, 0);
  c[0] ^= 1;
  c[static_cast<std::size_t>(k)] ^= 1;
  c[static_cast<std::size_t>(2 * k)] ^= 1;
  return LinearizedPoly(f, 1, c);
}

LinearizedPoly trinomial_weighted(const Field& f, int k, u32 lambda) {
  if (lambda == 0) throw std::invalid_argument("trinomial_weighted: lambda must be nonzero");
  return LinearizedPoly(f, k, {lambda, 1, lambda});
}

}  // namespace nega

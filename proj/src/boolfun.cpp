#include "nega/boolfun.hpp"

#include <sstream>

#include "nega/kernels.hpp"

namespace nega {

TruthTable::TruthTable(int n, IndexBasis basis) : n_(n), basis_(basis) {
  if (n < 1 || n > 20) throw std::invalid_argument("TruthTable: n must be in [1, 20]");
  words_.assign((size() + 63) >> 6, 0);
}

TruthTable TruthTable::build(const Field& f, IndexBasis basis,
                             const std::function<int(u32)>& fn) {
  TruthTable tt(f.n(), basis);
  if (basis == IndexBasis::Poly) {
    for (u32 i = 0; i < tt.size(); ++i)
      if (fn(i)) tt.set(i, 1);
  } else {
    const SelfDualBasis& b = f.self_dual_basis();
    for (u32 i = 0; i < tt.size(); ++i)
      if (fn(from_coords(f, b, i))) tt.set(i, 1);
  }
  return tt;
}

u64 TruthTable::weight() const {
  u64 w = 0;
  for (u64 word : words_) w += static_cast<u64>(__builtin_popcountll(word));
  return w;
}

std::string TruthTable::to_file_string() const {
  static const char* digits = "0123456789abcdef";
  std::string out = "n=" + std::to_string(n_) + " basis=" +
                    (basis_ == IndexBasis::SelfDual ? "selfdual" : "poly") + "\n";
  const u32 ndigits = size() >= 4 ? size() / 4 : 1;
  for (u32 d = 0; d < ndigits; ++d) {
    u32 nib = 0;
    for (u32 t = 0; t < 4; ++t) {
      const u32 i = 4 * d + t;
      if (i < size() && get(i)) nib |= 1u << t;
    }
    out += digits[nib];
  }
  out += '\n';
  return out;
}

TruthTable TruthTable::from_file_string(const std::string& text) {
  std::istringstream in(text);
  std::string header, hex;
  if (!std::getline(in, header) || !std::getline(in, hex))
    throw std::runtime_error("truth table: expected two lines");
  int n = 0;
  char basis_buf[16] = {0};
  if (std::sscanf(header.c_str(), "n=%d basis=%15s", &n, basis_buf) != 2)
    throw std::runtime_error("truth table: malformed header line");
  const std::string basis_str(basis_buf);
  IndexBasis basis;
  if (basis_str == "selfdual")
    basis = IndexBasis::SelfDual;
  else if (basis_str == "poly")
    basis = IndexBasis::Poly;
  else
    throw std::runtime_error("truth table: basis must be selfdual or poly");
  TruthTable tt(n, basis);
  const u32 ndigits = tt.size() >= 4 ? tt.size() / 4 : 1;
  if (hex.size() != ndigits)
    throw std::runtime_error("truth table: wrong number of hex digits");
  for (u32 d = 0; d < ndigits; ++d) {
    const char c = hex[d];
    u32 nib;
    if (c >= '0' && c <= '9')
      nib = static_cast<u32>(c - '0');
    else if (c >= 'a' && c <= 'f')
      nib = static_cast<u32>(c - 'a' + 10);
    else
      throw std::runtime_error("truth table: invalid hex digit");
    for (u32 t = 0; t < 4; ++t) {
      const u32 i = 4 * d + t;
      if ((nib >> t) & 1) {
        if (i >= tt.size())
          throw std::runtime_error("truth table: bit set beyond 2^n");
        tt.set(i, 1);
      }
    }
  }
  return tt;
}

WalshSpectrum walsh_spectrum(const TruthTable& tt) {
  WalshSpectrum v(tt.size());
  for (u32 i = 0; i < tt.size(); ++i) v[i] = tt.get(i) ? -1 : 1;
  kernels::walsh_inplace(v.data(), tt.n());
  return v;
}

NegaSpectrum nega_spectrum(const TruthTable& tt) {
  std::vector<i32> re(tt.size()), im(tt.size(), 0);
  for (u32 i = 0; i < tt.size(); ++i) re[i] = tt.get(i) ? -1 : 1;
  kernels::nega_inplace(re.data(), im.data(), tt.n());
  NegaSpectrum out(tt.size());
  for (u32 i = 0; i < tt.size(); ++i) out[i] = GaussianInt{re[i], im[i]};
  return out;
}

bool parseval_holds(const WalshSpectrum& w) {
  u64 sum = 0;
  for (i32 x : w) sum += static_cast<u64>(static_cast<i64>(x) * x);
  return sum == static_cast<u64>(w.size()) * w.size();
}

bool nega_parseval_holds(const NegaSpectrum& s) {
  u64 sum = 0;
  for (const GaussianInt& g : s) sum += static_cast<u64>(g.norm2());
  return sum == static_cast<u64>(s.size()) * s.size();
}

bool is_bent(const TruthTable& tt) {
  if (tt.n() % 2 != 0) return false;  // 2^n is not a square of an integer
  const i64 flat = i64(1) << tt.n();
  for (i32 w : walsh_spectrum(tt))
    if (static_cast<i64>(w) * w != flat) return false;
  return true;
}

bool is_negabent_spectral(const TruthTable& tt) {
  if (tt.index_basis() != IndexBasis::SelfDual)
    throw std::invalid_argument(
        "is_negabent_spectral: table uses polynomial-basis indexing; the "
        "spectral verdict requires self-dual indexing");
  const i64 flat = i64(1) << tt.n();
  for (const GaussianInt& g : nega_spectrum(tt))
    if (g.norm2() != flat) return false;
  return true;
}

TruthTable anf(const TruthTable& tt) {
  TruthTable out = tt;
  std::vector<u64>& w = out.words();
  const u32 size = tt.size();
  // subset-sum (Moebius) transform over GF(2): f[x | bit] ^= f[x]
  for (int j = 0; j < tt.n() && (1u << j) < 64; ++j) {
    const u32 s = 1u << j;
    const u64 low = kernels::kIndexBitPattern[j];  // bit i set iff bit j of i set
    for (u64& word : w) word ^= (word & ~low) << s;
  }
  for (int j = 6; j < tt.n(); ++j) {
    const u32 s = (1u << j) >> 6;
    for (u32 base = 0; base < (size >> 6); base += 2 * s)
      for (u32 t = 0; t < s; ++t) w[base + s + t] ^= w[base + t];
  }
  return out;
}

int degree(const TruthTable& tt) {
  const TruthTable c = anf(tt);
  int deg = -1;  // -1 for the zero function
  for (u32 i = 0; i < c.size(); ++i)
    if (c.get(i)) deg = std::max(deg, __builtin_popcount(i));
  return deg < 0 ? 0 : deg;
}

bool is_balanced(const TruthTable& tt) { return tt.weight() == tt.size() / 2; }

namespace {
std::vector<u64> poly_table(const Field& f, const std::function<int(u32)>& fn) {
  std::vector<u64> words((f.size() + 63) >> 6, 0);
  for (u32 x = 0; x < f.size(); ++x)
    if (fn(x)) words[x >> 6] |= 1ULL << (x & 63);
  return words;
}
}  // namespace

bool negabent_criterion(const Field& f, const std::function<int(u32)>& fn) {
  return negabent_criterion_table(f, poly_table(f, fn));
}

bool negabent_criterion_table(const Field& f, const std::vector<u64>& poly_indexed) {
  return first_unbalanced_derivative(f, poly_indexed) == 0;
}

u32 first_unbalanced_derivative(const Field& f, const std::vector<u64>& poly_indexed) {
  if (poly_indexed.size() != (f.size() + 63) >> 6)
    throw std::invalid_argument("negabent criterion: table size mismatch");
  return kernels::first_unbalanced(poly_indexed.data(), f.n(),
                                   f.tr_unit_masks().data());
}

}  // namespace nega

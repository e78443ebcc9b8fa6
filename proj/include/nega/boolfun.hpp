#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nega/field.hpp"

namespace nega {

/// Which element-to-index convention produced a table built from a field
/// function. Spectral negabent verdicts witness the field-level definition
/// only under self-dual indexing (the trace form then equals the dot product).
enum class IndexBasis { SelfDual, Poly };

/// Boolean function on 2^n points, bit-packed, 64 indices per word.
class TruthTable {
 public:
  explicit TruthTable(int n, IndexBasis basis = IndexBasis::SelfDual);

  /// bits[i] = f(element whose coordinate vector has integer value i) under
  /// the chosen basis. SelfDual uses the field's cached self-dual basis.
  static TruthTable build(const Field& f, IndexBasis basis,
                          const std::function<int(u32)>& fn);

  int n() const { return n_; }
  IndexBasis index_basis() const { return basis_; }
  u32 size() const { return 1u << n_; }
  int get(u32 i) const { return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1); }
  void set(u32 i, int bit) {
    const u64 m = 1ULL << (i & 63);
    if (bit)
      words_[i >> 6] |= m;
    else
      words_[i >> 6] &= ~m;
  }
  const std::vector<u64>& words() const { return words_; }
  std::vector<u64>& words() { return words_; }

  u64 weight() const;
  bool operator==(const TruthTable& o) const {
    return n_ == o.n_ && basis_ == o.basis_ && words_ == o.words_;
  }

  // Truth-table file format: line 1 "n=<int> basis=<selfdual|poly>", line 2
  // the 2^n bits as lowercase hex, leftmost digit carrying indices 0..3 with
  // index 0 in its least significant bit. Exact round trip.
  std::string to_file_string() const;
  static TruthTable from_file_string(const std::string& text);

 private:
  int n_;
  IndexBasis basis_;
  std::vector<u64> words_;
};

struct GaussianInt {
  i32 re = 0;
  i32 im = 0;
  i64 norm2() const {
    return static_cast<i64>(re) * re + static_cast<i64>(im) * im;
  }
  bool operator==(const GaussianInt&) const = default;
};

using WalshSpectrum = std::vector<i32>;
using NegaSpectrum = std::vector<GaussianInt>;

/// W_f(a) = sum_x (-1)^(f(x) + a.x), unnormalized, via the in-place butterfly.
WalshSpectrum walsh_spectrum(const TruthTable& tt);

/// N_f(a) = sum_x (-1)^(f(x) + a.x) i^wt(x), exact Gaussian integers.
NegaSpectrum nega_spectrum(const TruthTable& tt);

bool parseval_holds(const WalshSpectrum& w);
bool nega_parseval_holds(const NegaSpectrum& s);

bool is_bent(const TruthTable& tt);
/// Exact check |N(a)|^2 == 2^n for all a. Throws std::invalid_argument for
/// polynomial-basis tables (the verdict would not witness the field-level
/// definition).
bool is_negabent_spectral(const TruthTable& tt);

/// Algebraic normal form (binary Moebius transform); an involution.
TruthTable anf(const TruthTable& tt);
int degree(const TruthTable& tt);

bool is_balanced(const TruthTable& tt);

/// Intrinsic negabent test: for every nonzero a, x -> f(x) + f(x+a) + Tr(ax)
/// is balanced. Basis-independent.
bool negabent_criterion(const Field& f, const std::function<int(u32)>& fn);

/// Same check on a pre-built table indexed by element bits (x+a is index XOR).
bool negabent_criterion_table(const Field& f, const std::vector<u64>& poly_indexed);

/// Witness variant: some nonzero a whose derivative is unbalanced, or 0.
u32 first_unbalanced_derivative(const Field& f, const std::vector<u64>& poly_indexed);

}  // namespace nega

#include "nega/families.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace nega {

const char* family_name(Family f) {
  switch (f) {
    case Family::Thm2: return "thm2";
    case Family::Thm4: return "thm4";
    case Family::Thm5: return "thm5";
    case Family::Thm6: return "thm6";
    case Family::MonomialD: return "monomial-d";
    case Family::Niho: return "niho";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "thm2") return Family::Thm2;
  if (s == "thm4") return Family::Thm4;
  if (s == "thm5") return Family::Thm5;
  if (s == "thm6") return Family::Thm6;
  if (s == "monomial-d" || s == "thm7") return Family::MonomialD;
  if (s == "niho" || s == "thm8") return Family::Niho;
  throw std::invalid_argument("unknown family: " + s);
}

const char* verdict_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Negabent: return "Negabent";
    case VerdictStatus::NotNegabent: return "NotNegabent";
    case VerdictStatus::SufficientOnlyUnknown: return "SufficientOnlyUnknown";
  }
  return "?";
}

namespace {
std::string hex(u32 v) {
  std::ostringstream s;
  s << "0x" << std::hex << v;
  return s.str();
}
}  // namespace

std::string FamilyInstance::param_string() const {
  std::string s = std::string(family_name(family)) + " n=" + std::to_string(n);
  switch (family) {
    case Family::Thm2:
      s += " lambda=" + hex(lambda) + " u=" + hex(u) + " v=" + hex(v);
      break;
    case Family::Thm4:
      s += " u=" + hex(u) + " v=" + hex(v);
      break;
    case Family::Thm5:
      s += " k=" + std::to_string(k) + " v=" + hex(v);
      break;
    case Family::Thm6:
      s += " k=" + std::to_string(k) + " r=" + std::to_string(r) +
           " lambda=" + hex(lambda) + " v=" + hex(v);
      break;
    case Family::MonomialD:
      s += " lambda=" + hex(lambda);
      break;
    case Family::Niho:
      s += " r=" + std::to_string(r) + " alpha=" + hex(alpha);
      break;
  }
  return s;
}

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("family instance: ") + what);
}

void require_nonzero(u32 x, const char* what) { require(x != 0, what); }

}  // namespace

void validate(const FamilyInstance& inst, const Field& f) {
  require(inst.n == f.n(), "n does not match the field");
  const int n = inst.n;
  switch (inst.family) {
    case Family::Thm2:
      require(n % 2 == 0, "thm2 requires n = 2k");
      require(f.in_subfield(inst.lambda, n / 2), "thm2 requires lambda in F_{2^k}");
      require_nonzero(inst.u, "thm2 requires u != 0");
      require_nonzero(inst.v, "thm2 requires v != 0");
      break;
    case Family::Thm4:
      require_nonzero(inst.u, "thm4 requires u != 0");
      require_nonzero(inst.v, "thm4 requires v != 0");
      break;
    case Family::Thm5:
      require(n % 2 == 0, "thm5 requires even n");
      require(inst.k >= 1, "thm5 requires k >= 1");
      require(std::gcd(n, 3 * inst.k) == std::gcd(n, inst.k),
              "thm5 requires gcd(n,3k) = gcd(n,k)");
      require_nonzero(inst.v, "thm5 requires v != 0");
      break;
    case Family::Thm6: {
      require(inst.k >= 1 && inst.r >= 1 && inst.r * inst.k == n, "thm6 requires n = rk");
      require(n % 2 == 0, "thm6 requires rk even");
      require_nonzero(inst.lambda, "thm6 requires lambda != 0");
      require(f.in_subfield(inst.lambda, inst.k), "thm6 requires lambda in F_{2^k}");
      require_nonzero(inst.v, "thm6 requires v != 0");
      break;
    }
    case Family::MonomialD: {
      require(n % 2 == 0, "monomial-d requires n = 2k");
      const int k = n / 2;
      require(k >= 3 && k % 2 == 1, "monomial-d requires k odd, k >= 3");
      break;
    }
    case Family::Niho:
      require(n % 2 == 0, "niho requires n = 2m");
      require(inst.r >= 1 && inst.r <= (1 << (n / 2)), "niho requires 1 <= r <= 2^m");
      break;
  }
}

std::function<int(u32)> build_function(const FamilyInstance& inst, const Field& f) {
  validate(inst, f);
  const int n = inst.n;
  switch (inst.family) {
    case Family::Thm2: {
      const int k = n / 2;
      const u64 e = (u64(1) << k) + 1;
      const u32 lambda = inst.lambda, u = inst.u, v = inst.v;
      return [&f, k, e, lambda, u, v](u32 x) {
        const int quad = f.subfield_trace_bit(f.mul(lambda, f.pow(x, e)), k);
        return quad ^ (f.trace_bit(f.mul(u, x)) & f.trace_bit(f.mul(v, x)));
      };
    }
    case Family::Thm4: {
      const u32 u = inst.u, v = inst.v;
      return [&f, u, v](u32 x) {
        return f.trace_bit(f.mul(u, x)) & f.trace_bit(f.mul(v, x));
      };
    }
    case Family::Thm5: {
      const u64 e = (u64(1) << inst.k) + 1;
      const u32 v = inst.v;
      return [&f, e, v](u32 x) {
        return f.trace_bit(f.pow(x, e)) ^
               (f.trace_bit(x) & f.trace_bit(f.mul(v, x)));
      };
    }
    case Family::Thm6: {
      const u64 e = (u64(1) << inst.k) + 1;
      const u32 lambda = inst.lambda, v = inst.v;
      return [&f, e, lambda, v](u32 x) {
        return f.trace_bit(f.mul(lambda, f.pow(x, e))) ^
               (f.trace_bit(x) & f.trace_bit(f.mul(v, x)));
      };
    }
    case Family::MonomialD: {
      const u64 d = (u64(1) << (n / 2)) + 3;
      const u32 lambda = inst.lambda;
      return [&f, d, lambda](u32 x) { return f.trace_bit(f.mul(lambda, f.pow(x, d))); };
    }
    case Family::Niho: {
      const u64 d = niho_exponent(inst.r, n / 2);
      const u32 alpha = inst.alpha;
      return [&f, d, alpha](u32 x) { return f.trace_bit(f.mul(alpha, f.pow(x, d))); };
    }
  }
  throw std::logic_error("build_function: unreachable");
}

namespace {

// The thm2 trace triple for lambda != 1:
// (Tr(u/(1+lambda)), Tr((lambda u^(2^k) + u)v / (1+lambda^2)), Tr(v/(1+lambda))).
struct Thm2Triple {
  int tu, tm, tv;
};

Thm2Triple thm2_triple(const Field& f, u32 lambda, u32 u, u32 v) {
  const int k = f.n() / 2;
  const u32 inv_1l = f.inv(1u ^ lambda);
  const u32 inv_1l2 = f.mul(inv_1l, inv_1l);  // 1/(1+lambda^2) = (1/(1+lambda))^2
  const u32 mid = f.mul(f.mul(f.add(f.mul(lambda, f.frob(u, k)), u), v), inv_1l2);
  return {f.trace_bit(f.mul(u, inv_1l)), f.trace_bit(mid), f.trace_bit(f.mul(v, inv_1l))};
}

bool thm2_triple_accepted(const Thm2Triple& t) {
  // accepted tuples: (0,0,0), (0,0,1), (1,0,0), (1,1,1)
  return (t.tu == 0 && t.tm == 0) || (t.tu == 1 && t.tm == t.tv);
}

}  // namespace

Verdict predict_negabent(const FamilyInstance& inst, const Field& f) {
  validate(inst, f);
  const int n = inst.n;
  switch (inst.family) {
    case Family::Thm2: {
      const int k = n / 2;
      if (inst.lambda != 1) {
        const Thm2Triple t = thm2_triple(f, inst.lambda, inst.u, inst.v);
        return thm2_triple_accepted(t)
                   ? Verdict{VerdictStatus::Negabent, "thm2: lambda != 1, triple accepted"}
                   : Verdict{VerdictStatus::NotNegabent, "thm2: lambda != 1, triple rejected"};
      }
      if (k == 1)
        return inst.u != inst.v
                   ? Verdict{VerdictStatus::Negabent, "thm2: lambda = 1, k = 1, u != v"}
                   : Verdict{VerdictStatus::NotNegabent, "thm2: lambda = 1, k = 1, u = v"};
      if (k == 2) {
        const bool ok = !f.in_subfield(inst.u, 2) && !f.in_subfield(inst.v, 2) &&
                        !f.in_subfield(inst.u ^ inst.v, 2);
        return ok ? Verdict{VerdictStatus::Negabent, "thm2: lambda = 1, k = 2, u,v,u+v outside F_4"}
                  : Verdict{VerdictStatus::NotNegabent, "thm2: lambda = 1, k = 2"};
      }
      return {VerdictStatus::NotNegabent, "thm2: lambda = 1, k > 2"};
    }
    case Family::Thm4: {
      const int tu = f.trace_bit(inst.u);
      const int tuv = f.trace_bit(f.mul(inst.u, inst.v));
      if (tu == 0 && tuv == 0)
        return {VerdictStatus::Negabent, "thm4: Tr(u) = 0, Tr(uv) = 0"};
      if (tu == 1 && f.trace_bit(f.mul(inst.u ^ 1u, inst.v)) == 0)
        return {VerdictStatus::Negabent, "thm4: Tr(u) = 1, Tr((u+1)v) = 0"};
      return {VerdictStatus::NotNegabent, "thm4: no clause"};
    }
    case Family::Thm5:
      return f.trace_bit(inst.v) == 0
                 ? Verdict{VerdictStatus::Negabent, "thm5: Tr(v) = 0"}
                 : Verdict{VerdictStatus::SufficientOnlyUnknown, "thm5: Tr(v) = 1"};
    case Family::Thm6:
      return f.trace_bit(inst.v) == 0
                 ? Verdict{VerdictStatus::Negabent, "thm6: Tr(v) = 0"}
                 : Verdict{VerdictStatus::SufficientOnlyUnknown, "thm6: Tr(v) = 1"};
    case Family::MonomialD:
      return inst.lambda <= 1
                 ? Verdict{VerdictStatus::Negabent, "monomial-d: lambda in F_2"}
                 : Verdict{VerdictStatus::NotNegabent, "monomial-d: lambda outside F_2"};
    case Family::Niho: {
      const int m = n / 2;
      if (inst.r < 2 || inst.r > (1 << (m - 1)) + 1)
        throw std::invalid_argument("niho: r outside the classified range");
      return conjecture1_predicate(inst.r, inst.alpha, m, f)
                 ? Verdict{VerdictStatus::Negabent, "niho: conjectured clause holds"}
                 : Verdict{VerdictStatus::NotNegabent, "niho: no clause"};
    }
  }
  throw std::logic_error("predict_negabent: unreachable");
}

bool predict_bent(const Field& f, u32 lambda, u32 u, u32 v) {
  if (f.n() % 2 != 0) throw std::invalid_argument("predict_bent: n must be even");
  if (lambda == 0) throw std::invalid_argument("predict_bent: lambda must be nonzero");
  if (!f.in_subfield(lambda, f.n() / 2))
    throw std::invalid_argument("predict_bent: lambda must lie in F_{2^k}");
  const int k = f.n() / 2;
  return f.trace_bit(f.mul(f.mul(f.inv(lambda), f.frob(u, k)), v)) == 0;
}

bool predict_bent_negabent(const Field& f, u32 lambda, u32 u, u32 v) {
  if (f.n() % 2 != 0) throw std::invalid_argument("predict_bent_negabent: n must be even");
  if (lambda == 0) throw std::invalid_argument("predict_bent_negabent: lambda must be nonzero");
  if (!f.in_subfield(lambda, f.n() / 2))
    throw std::invalid_argument("predict_bent_negabent: lambda must lie in F_{2^k}");
  const int k = f.n() / 2;
  const int bent_tr = f.trace_bit(f.mul(f.mul(f.inv(lambda), f.frob(u, k)), v));
  if (lambda != 1) {
    const Thm2Triple t = thm2_triple(f, lambda, u, v);
    if (bent_tr != 0) return false;
    if (t.tu == 0) return t.tm == 0;
    // rewritten middle trace for the Tr(u/(1+lambda)) = 1 branch:
    // Tr((lambda u^(2^k) + u + 1 + lambda)v / (1 + lambda^2)) = tm + tv
    return (t.tm ^ t.tv) == 0;
  }
  if (k == 2)
    return !f.in_subfield(u, 2) && !f.in_subfield(v, 2) && !f.in_subfield(u ^ v, 2) &&
           f.trace_bit(f.mul(f.frob(u, k), v)) == 0;
  return false;
}

u64 corollary1_count(const Field& f, u32 lambda) {
  if (f.n() % 2 != 0) throw std::invalid_argument("corollary1_count: n must be even");
  const int k = f.n() / 2;
  if (!f.in_subfield(lambda, k))
    throw std::invalid_argument("corollary1_count: lambda must lie in F_{2^k}");
  const u64 sz = f.size();
  if (lambda != 1) return (sz / 2 - 2) * (sz - 1);
  if (k == 1) return 6;
  if (k == 2) return 96;
  return 0;
}

u64 niho_exponent(int r, int m) {
  if (m < 1 || r < 1 || r > (1 << m))
    throw std::invalid_argument("niho_exponent: need 1 <= r <= 2^m");
  return static_cast<u64>(r) * ((u64(1) << m) - 1) + 1;
}

bool niho_coset_equivalent(int r1, int r2, int m) {
  if (m < 1 || r1 < 1 || r1 > (1 << m) || r2 < 1 || r2 > (1 << m))
    throw std::invalid_argument("niho_coset_equivalent: r out of range");
  const int mod = (1 << m) + 1;
  return (r1 - r2) % mod == 0 || (r1 + r2) % mod == 1 % mod;
}

bool conjecture1_predicate(int r, u32 alpha, int m, const Field& f) {
  if (f.n() != 2 * m) throw std::invalid_argument("conjecture1: field must be F_{2^(2m)}");
  if (r < 2 || r > (1 << (m - 1)) + 1)
    throw std::invalid_argument("conjecture1: need 2 <= r <= 2^(m-1) + 1");
  if (m % 2 == 1 && m >= 2 && r == (1 << (m - 2)) + 1 && alpha <= 1) return true;
  if (r == (1 << (m - 1)) + 1 && f.add(alpha, f.frob(alpha, m)) != 1) return true;
  return false;
}

u64 mod_inverse(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    const i64 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

}  // namespace nega

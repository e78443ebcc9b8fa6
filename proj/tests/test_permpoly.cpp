#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nega/permpoly.hpp"
#include "test_util.hpp"

using namespace nega;

TEST_CASE("poly gcd examples") {
  const Field f2(1);
  SUBCASE("gcd(p, 0) is monic p") {
    const Poly p(f2, {1, 1, 1});  // 1 + x + x^2
    CHECK(poly_gcd(p, Poly::zero(f2)) == p);
    CHECK(poly_gcd(Poly::zero(f2), p) == p);
    CHECK_THROWS_AS(poly_gcd(Poly::zero(f2), Poly::zero(f2)), std::invalid_argument);
  }
  SUBCASE("over F_2: gcd(1+x+x^2, x^3+1) = 1+x+x^2") {
    const Poly a(f2, {1, 1, 1});
    const Poly b = Poly::x_pow_plus_one(f2, 3);
    CHECK(poly_gcd(a, b) == a);
  }
  SUBCASE("over F_4, lambda=omega: gcd(omega + x + omega x^2, x^3+1) = 1") {
    const Field f4(2);
    const Poly a(f4, {2, 1, 2});
    CHECK(poly_gcd(a, Poly::x_pow_plus_one(f4, 3)).degree() == 0);
  }
}

TEST_CASE("divmod reconstruction over F_8") {
  const Field f(3);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    std::vector<u32> ca(1 + (rng() % 7)), cb(1 + (rng() % 5));
    for (u32& c : ca) c = static_cast<u32>(rng()) & f.mask();
    for (u32& c : cb) c = static_cast<u32>(rng()) & f.mask();
    const Poly a(f, ca), b(f, cb);
    if (b.is_zero()) continue;
    const auto [q, r] = Poly::divmod(a, b);
    CHECK(r.degree() < b.degree());
    CHECK(b * q + r == a);
  }
}

TEST_CASE("monic normalization") {
  const Field f(2);
  const Poly p(f, {1, 0, 2});  // 1 + omega x^2
  const Poly m = p.monic();
  CHECK(m.coeff(2) == 1);
  CHECK(m.coeff(0) == f.mul(1, f.inv(2)));
}

TEST_CASE("linearized permutation criterion vs bijectivity: spec examples") {
  SUBCASE("identity") {
    const Field f(4);
    const LinearizedPoly id(f, 1, {1});
    CHECK(is_linearized_permutation(id));
    CHECK(to_linear_map(id) == LinearMap::identity(4));
  }
  SUBCASE("x + x^2 + x^4 on F_64 is not a permutation") {
    const Field f(6);
    const LinearizedPoly L = trinomial_frobenius(f, 1);
    CHECK_FALSE(is_linearized_permutation(L));
    CHECK_FALSE(testutil::is_bijection(f, [&](u32 x) { return L.eval(x); }));
    CHECK_FALSE(lemma4_condition(6, 1));
  }
  SUBCASE("x + x^2 + x^4 on F_16 is a permutation") {
    const Field f(4);
    const LinearizedPoly L = trinomial_frobenius(f, 1);
    CHECK(is_linearized_permutation(L));
    CHECK(testutil::is_bijection(f, [&](u32 x) { return L.eval(x); }));
    CHECK(lemma4_condition(4, 1));
  }
}

TEST_CASE("lemma4 condition values") {
  CHECK(lemma4_condition(4, 1));
  CHECK_FALSE(lemma4_condition(6, 1));
  CHECK_FALSE(lemma4_condition(6, 2));
  CHECK(lemma4_condition(8, 2));
  CHECK_THROWS_AS(lemma4_condition(0, 1), std::invalid_argument);
}

TEST_CASE("lemma4 condition == gcd criterion == bijectivity, all n <= 12") {
  for (int n = 1; n <= 12; ++n) {
    const Field f(n);
    for (int k = 1; k <= n; ++k) {
      const LinearizedPoly L = trinomial_frobenius(f, k);
      const bool cond = lemma4_condition(n, k);
      CHECK(cond == is_linearized_permutation(L));
      CHECK(cond == testutil::is_bijection(f, [&](u32 x) { return L.eval(x); }));
    }
  }
}

TEST_CASE("lemma5 condition: spec examples") {
  const Field f4(2);
  SUBCASE("r=4 passes for every nonzero lambda") {
    for (u32 l = 1; l < 4; ++l) CHECK(lemma5_condition(f4, l, 4));
    const Field f8(3);
    for (u32 l = 1; l < 8; ++l) CHECK(lemma5_condition(f8, l, 4));
  }
  SUBCASE("r=3, lambda=1 fails") {
    CHECK_FALSE(lemma5_condition(f4, 1, 3));
    CHECK(lemma5_condition(f4, 2, 3));  // lambda = omega passes
  }
  SUBCASE("r=5, k=2, lambda=omega fails") {
    CHECK_FALSE(lemma5_condition(f4, 2, 5));
    CHECK_FALSE(lemma5_condition(f4, 3, 5));
    CHECK(lemma5_condition(f4, 1, 5));
  }
  CHECK_THROWS_AS(lemma5_condition(f4, 0, 3), std::invalid_argument);
}

TEST_CASE("lemma5 condition == bijectivity on F_{2^(rk)}, rk <= 12") {
  for (int k = 1; k <= 6; ++k) {
    for (int r = 1; r * k <= 12; ++r) {
      const Field big(r * k);
      const std::vector<u32> sub = big.subfield(k);
      for (u32 lb : sub) {
        if (lb == 0) continue;
        const LinearizedPoly L = trinomial_weighted(big, k, lb);
        const bool gcd_big = lemma5_condition(big, lb, r);
        CHECK(gcd_big == is_linearized_permutation(L));
        CHECK(gcd_big == testutil::is_bijection(big, [&](u32 x) { return L.eval(x); }));
      }
    }
  }
}

TEST_CASE("remark: lambda=1 lemma5 reduces to lemma4 with n = rk") {
  const Field f2(1);
  for (int r = 1; r <= 12; ++r)
    for (int k = 1; r * k <= 12; ++k)
      CHECK(lemma5_condition(f2, 1, r) == lemma4_condition(r * k, k));
}

TEST_CASE("compositional inverse: identity, pointwise inverse, g(1)=1") {
  const Field f(4);
  const LinearizedPoly id(f, 1, {1});
  CHECK(compositional_inverse(id) == LinearMap::identity(4));

  const LinearizedPoly L = trinomial_frobenius(f, 1);  // x + x^2 + x^4 on F_16
  const LinearMap g = compositional_inverse(L);
  for (u32 x = 0; x < f.size(); ++x) {
    CHECK(g.apply(L.eval(x)) == x);
    CHECK(L.eval(g.apply(x)) == x);
  }
  CHECK(g.apply(1) == 1);  // f(1) = 1

  const Field f6(6);
  CHECK_THROWS_AS(compositional_inverse(trinomial_frobenius(f6, 1)),
                  std::invalid_argument);
}

TEST_CASE("inverse of lemma4/lemma5 permutations preserves the trace") {
  SUBCASE("lemma4 shapes") {
    for (int n = 2; n <= 12; ++n) {
      const Field f(n);
      for (int k = 1; k <= n; ++k) {
        if (!lemma4_condition(n, k)) continue;
        const LinearMap g = compositional_inverse(trinomial_frobenius(f, k));
        for (u32 x = 0; x < f.size(); ++x)
          CHECK(f.trace_bit(g.apply(x)) == f.trace_bit(x));
      }
    }
  }
  SUBCASE("lemma5 shape, r=4, k=1, lambda=1 on F_16") {
    const Field f(4);
    const LinearizedPoly L = trinomial_weighted(f, 1, 1);
    REQUIRE(is_linearized_permutation(L));
    const LinearMap g = compositional_inverse(L);
    for (u32 x = 0; x < f.size(); ++x) {
      CHECK(g.apply(L.eval(x)) == x);
      CHECK(f.trace_bit(g.apply(x)) == f.trace_bit(x));
    }
  }
  SUBCASE("lemma5 shapes across rk <= 12") {
    for (int k = 1; k <= 4; ++k)
      for (int r = 2; r * k <= 12; ++r) {
        const Field big(r * k);
        for (u32 lb : big.subfield(k)) {
          if (lb == 0 || !lemma5_condition(big, lb, r)) continue;
          const LinearMap g = compositional_inverse(trinomial_weighted(big, k, lb));
          for (u32 x = 0; x < big.size(); ++x)
            CHECK(big.trace_bit(g.apply(x)) == big.trace_bit(x));
        }
      }
  }
}

TEST_CASE("inverse of a q-polynomial commutes with the k-fold Frobenius") {
  const Field f(8);
  const int k = 2;
  for (u32 lb : f.subfield(k)) {
    if (lb == 0 || !lemma5_condition(f, lb, 4)) continue;
    const LinearizedPoly L = trinomial_weighted(f, k, lb);
    const LinearMap g = compositional_inverse(L);
    const LinearMap fr = frobenius_map(f, k);
    CHECK(g.compose(fr) == fr.compose(g));
  }
}

TEST_CASE("exponent folding: x^(2^n) terms collapse onto x") {
  const Field f(4);
  // k = n: f(x) = x + x^(2^4) + x^(2^8) = 3x = x on F_16
  const LinearizedPoly L = trinomial_frobenius(f, 4);
  for (u32 x = 0; x < f.size(); ++x) CHECK(L.eval(x) == x);
  CHECK(is_linearized_permutation(L));
}

TEST_CASE("linearized poly validation") {
  const Field f(6);
  CHECK_THROWS_AS(LinearizedPoly(f, 4, {1}), std::invalid_argument);  // 4 does not divide 6
  CHECK_THROWS_AS(LinearizedPoly(f, 2, {2}), std::invalid_argument);  // x not in F_4
  CHECK_NOTHROW(LinearizedPoly(f, 2, {f.subfield(2)[2]}));
}

TEST_CASE("linearized evaluation is F_{2^k}-linear") {
  const Field f(8);
  const int k = 2;
  std::mt19937_64 rng(22);
  const std::vector<u32> sub = f.subfield(k);
  const LinearizedPoly L = trinomial_weighted(f, k, sub[2]);
  for (int t = 0; t < 100; ++t) {
    const u32 x = static_cast<u32>(rng()) & f.mask();
    const u32 y = static_cast<u32>(rng()) & f.mask();
    const u32 alpha = sub[rng() % sub.size()];
    const u32 lhs = L.eval(f.add(f.mul(alpha, x), y));
    const u32 rhs = f.add(f.mul(alpha, L.eval(x)), L.eval(y));
    CHECK(lhs == rhs);
  }
}

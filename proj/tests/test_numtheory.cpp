#include <doctest.h>

#include <limits>
#include <vector>

#include "psiflat/numtheory.hpp"

using namespace psiflat;

namespace {

std::vector<bool> reference_sieve(int limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = prime[1] = false;
  for (int i = 2; i * i <= limit; ++i)
    if (prime[i])
      for (int j = i * i; j <= limit; j += i) prime[j] = false;
  return prime;
}

// All (alpha, beta) with alpha, beta >= 1 and alpha p + beta q = r.
std::vector<LinearRepresentation> scan_representations(Int p, Int q, Int r) {
  std::vector<LinearRepresentation> out;
  for (Int beta = 1; beta * q < r; ++beta)
    if ((r - beta * q) % p == 0) out.push_back({(r - beta * q) / p, beta});
  return out;
}

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(561));  // Carmichael
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(18446744073709551557ull));       // largest 64-bit prime
  CHECK_FALSE(is_prime(3825123056546413051ull));  // strong pseudoprime to bases 2..23
  CHECK_FALSE(is_prime(4294967297ull));           // 641 * 6700417
}

TEST_CASE("is_prime agrees with a sieve up to 10^6") {
  const auto sieve = reference_sieve(1'000'000);
  for (int n = 0; n <= 1'000'000; ++n) REQUIRE(is_prime(static_cast<std::uint64_t>(n)) == sieve[n]);
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 11) == 4);
  CHECK(mod_inverse(1, 97) == 1);
  CHECK(mod_inverse(5, 7) == 3);
  CHECK_THROWS_AS(mod_inverse(6, 9), DomainError);
  CHECK_THROWS_AS(mod_inverse(3, 1), DomainError);

  SUBCASE("matches exhaustive search for m <= 1000") {
    for (Int m = 2; m <= 1000; ++m) {
      for (Int a = 1; a < m; ++a) {
        Int expected = 0;
        for (Int x = 1; x < m; ++x)
          if (a * x % m == 1) expected = x;
        if (expected == 0) {
          REQUIRE_THROWS_AS(mod_inverse(a, m), DomainError);
        } else {
          REQUIRE(mod_inverse(a, m) == expected);
        }
      }
    }
  }
}

TEST_CASE("ceil_div is the mathematical ceiling") {
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(6, 2) == 3);
  CHECK(ceil_div(0, 3) == 0);
  CHECK(ceil_div(-1, 2) == 0);
  CHECK(ceil_div(-3, 2) == -1);
  CHECK(ceil_div(-4, 2) == -2);
  for (Int num = -50; num <= 50; ++num)
    for (Int den = 1; den <= 9; ++den) {
      const Int c = ceil_div(num, den);
      REQUIRE(c * den >= num);
      REQUIRE((c - 1) * den < num);
    }
}

TEST_CASE("min_geq0") {
  CHECK(min_geq0({3, 5}) == 3);
  CHECK(min_geq0({-2, 4}) == 0);
  CHECK(min_geq0({0}) == 0);
}

TEST_CASE("checked arithmetic reports overflow") {
  constexpr Int kMax = std::numeric_limits<Int>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(kMax, 1), OverflowError);
  CHECK_THROWS_AS(checked_sub(std::numeric_limits<Int>::min(), 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(Int{1} << 40, Int{1} << 30), OverflowError);
}

TEST_CASE("decompose_mod_pq") {
  CHECK(decompose_mod_pq(0, 3, 5) == Decomposition{0, 0, false});
  CHECK(decompose_mod_pq(1, 3, 5) == Decomposition{2, 2, true});
  CHECK(decompose_mod_pq(8, 3, 5) == Decomposition{1, 1, false});
  CHECK_THROWS_AS(decompose_mod_pq(15, 3, 5), DomainError);
  CHECK_THROWS_AS(decompose_mod_pq(-1, 3, 5), DomainError);
  CHECK_THROWS_AS(decompose_mod_pq(0, 3, 3), DomainError);

  SUBCASE("round trip and uniqueness for all b, pq <= 10^4") {
    for (Int p : {2, 3, 5, 7, 11, 13}) {
      for (Int q : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97}) {
        if (p >= q || p * q > 10'000) continue;
        const PrimePair pair = make_prime_pair(p, q);
        CHECK(p * pair.p_prime + q * pair.q_prime == p * q + 1);
        for (Int b = 0; b < p * q; ++b) {
          const Decomposition d = decompose_mod_pq(b, pair);
          REQUIRE(d.u >= 0);
          REQUIRE(d.u < q);
          REQUIRE(d.v >= 0);
          REQUIRE(d.v < p);
          REQUIRE(d.u * p + d.v * q - (d.wrapped ? p * q : 0) == b);
          // No other (u, v) produces b in either form.
          int forms = 0;
          for (Int u = 0; u < q; ++u) {
            const Int rest = b - u * p;
            for (Int shift : {Int{0}, p * q})
              if ((rest + shift) >= 0 && (rest + shift) % q == 0 && (rest + shift) / q < p) ++forms;
          }
          REQUIRE(forms == 1);
        }
      }
    }
  }
}

TEST_CASE("decompose_r") {
  CHECK(decompose_r(3, 11, 17) == LinearRepresentation{2, 1});
  CHECK(decompose_r(5, 11, 31) == LinearRepresentation{4, 1});
  CHECK_FALSE(decompose_r(5, 11, 13).has_value());
  CHECK_THROWS_AS(decompose_r(3, 11, 23), DomainError);
  CHECK_THROWS_AS(decompose_r(11, 3, 17), DomainError);

  SUBCASE("agrees with an exhaustive (alpha, beta) scan") {
    for (Int p : {3, 5, 7, 11, 13}) {
      for (Int q : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        if (p >= q) continue;
        for (Int r = q + 1; r <= (p - 1) * (q - 1); ++r) {
          const auto reps = scan_representations(p, q, r);
          REQUIRE(reps.size() <= 1);
          const auto got = decompose_r(p, q, r);
          REQUIRE(got.has_value() == !reps.empty());
          if (got) {
            REQUIRE(*got == reps.front());
            REQUIRE(got->beta <= p - 1);
          }
        }
      }
    }
  }
}

TEST_CASE("make_family_triple") {
  const FamilyTriple t = make_family_triple(3, 11, 17);
  CHECK(t.alpha == 2);
  CHECK(t.beta == 1);
  CHECK(t.p_prime == 4);
  CHECK(t.q_prime == 2);
  CHECK(t.phi_pq == 20);
  CHECK(t.tau == 54);
  CHECK(t.deg_psi == 241);
  CHECK(t.tau == t.deg_psi - t.qr());

  auto fault_of = [](Int p, Int q, Int r) {
    try {
      make_family_triple(p, q, r);
    } catch (const TripleError& e) {
      return e.fault();
    }
    FAIL("expected a TripleError");
    return TripleFault::NotPrime;
  };
  CHECK(fault_of(3, 5, 7) == TripleFault::NotRepresentable);
  CHECK(fault_of(3, 11, 23) == TripleFault::ExceedsPhi);
  CHECK(fault_of(3, 9, 17) == TripleFault::NotPrime);
  CHECK(fault_of(11, 3, 17) == TripleFault::BadOrder);
  CHECK(fault_of(2, 11, 17) == TripleFault::BadOrder);
  CHECK(fault_of(3, 11, 11) == TripleFault::BadOrder);
  CHECK_THROWS_AS(make_family_triple(-3, 11, 17), DomainError);
}

#include <doctest.h>

#include "psiflat/coefficients.hpp"
#include "psiflat/height.hpp"
#include "psiflat/polynomial.hpp"
#include "psiflat/search.hpp"

using namespace psiflat;

TEST_CASE("height_formula examples") {
  CHECK(height_formula(make_family_triple(3, 11, 17)) == 2);
  CHECK(height_formula(make_family_triple(5, 11, 31)) == 1);
  CHECK(height_formula(make_family_triple(5, 7, 19)) == 2);
  CHECK(height_formula(make_family_triple(5, 7, 17)) == 2);
}

TEST_CASE("h_witnesses") {
  HeightReport rep = h_witnesses(make_family_triple(3, 11, 17));
  CHECK(rep.m1 == 17);
  CHECK(rep.m2 == 1);
  CHECK(rep.e_m1 == 2);
  CHECK(rep.e_m2 == -1);
  CHECK(rep.c_formula == 2);
  CHECK(rep.h_formula == 2);
  CHECK_FALSE(rep.c_oracle.has_value());

  rep = h_witnesses(make_family_triple(5, 11, 31), {.verify_witnesses = true, .with_oracle = true});
  CHECK(rep.m1 == 0);
  CHECK(rep.e_m1 == 1);
  CHECK(rep.c_oracle == 1);

  rep = h_witnesses(make_family_triple(5, 11, 31), {.verify_witnesses = false});
  CHECK_FALSE(rep.e_m1.has_value());

  for (const FamilyTriple& t : family_triples_up_to(100'000)) {
    const HeightReport r = h_witnesses(t);
    REQUIRE(r.m1 < t.pq());
    REQUIRE(r.m2 < t.pq());
    REQUIRE(*r.e_m1 >= 0);
    REQUIRE(*r.e_m2 <= 0);
  }
}

TEST_CASE("is_flat") {
  FlatnessVerdict v = is_flat(make_family_triple(5, 11, 31));
  CHECK(v.flat);
  CHECK(v.cond_d);
  CHECK_FALSE(v.cond_a);
  CHECK_FALSE(v.cond_b);
  CHECK_FALSE(v.cond_c);

  CHECK(is_flat(make_family_triple(3, 11, 17)) == FlatnessVerdict{});

  v = is_flat(make_family_triple(5, 11, 37));
  CHECK(v.flat);
  CHECK(v.cond_d);
}

TEST_CASE("flatness and height properties over p < q <= 120") {
  const PrimeSieve sieve(120 * 120);
  int flat_count = 0;
  for (Int p = 3; p <= 120; p += 2) {
    if (!sieve.contains(p)) continue;
    for (Int q = p + 2; q <= 120; q += 2) {
      if (!sieve.contains(q)) continue;
      for (const FamilyMember& m : family_members(p, q, sieve)) {
        const FamilyTriple t = make_family_triple(p, q, m.r);
        const Int h = height_formula(t);
        const FlatnessVerdict v = is_flat(t);
        REQUIRE(v.flat == (h == 1));
        REQUIRE(h >= 1);
        REQUIRE(h <= p - 1);
        if (v.cond_a || v.cond_b) REQUIRE(2 * t.r > t.pq());
        if (auto bound = moree_bound(t)) REQUIRE(h <= *bound);
        flat_count += v.flat;
      }
    }
  }
  CHECK(flat_count > 0);
}

TEST_CASE("moree_bound") {
  CHECK(moree_bound(make_family_triple(3, 11, 17)) == 2);
  CHECK(moree_bound(make_family_triple(5, 7, 19)) == 3);
  CHECK(moree_global_bound(make_family_triple(5, 7, 19)) == 4);

  // The gate deg Psi < 2qr is equivalent to tau < qr.
  int gated = 0;
  for (const FamilyTriple& t : family_triples_up_to(200'000)) {
    REQUIRE(moree_bound(t).has_value() == (t.tau < t.qr()));
    gated += !moree_bound(t).has_value();
  }
  CHECK(gated > 0);
}

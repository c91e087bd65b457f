#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <tuple>
#include <fstream>
#include <sstream>

#include "psiflat/polynomial.hpp"
#include "psiflat/search.hpp"

using namespace psiflat;

namespace {

std::vector<Int> rs(const std::vector<SearchRecord>& records) {
  std::vector<Int> out;
  for (const auto& r : records) out.push_back(r.r);
  return out;
}

}  // namespace

TEST_CASE("family_members") {
  CHECK(family_members(5, 11) == std::vector<FamilyMember>{{31, 4, 1}, {37, 3, 2}});
  CHECK(family_members(3, 5).empty());
  CHECK(family_members(5, 7) == std::vector<FamilyMember>{{17, 2, 1}, {19, 1, 2}});
  CHECK_THROWS_AS(family_members(4, 7), DomainError);
  CHECK_THROWS_AS(family_members(7, 5), DomainError);

  SUBCASE("matches an exhaustive alpha, beta scan for pq <= 10^4") {
    const PrimeSieve sieve(10'000);
    for (Int p = 3; p < 100; p += 2) {
      if (!sieve.contains(p)) continue;
      for (Int q = p + 2; p * q <= 10'000; q += 2) {
        if (!sieve.contains(q)) continue;
        const Int phi = (p - 1) * (q - 1);
        std::vector<FamilyMember> expected;
        for (Int beta = 1; beta * q < phi; ++beta)
          for (Int alpha = 1; alpha * p + beta * q <= phi; ++alpha)
            if (sieve.contains(alpha * p + beta * q)) expected.push_back({alpha * p + beta * q, alpha, beta});
        std::sort(expected.begin(), expected.end(), [](auto& a, auto& b) { return a.r < b.r; });
        const auto got = family_members(p, q, sieve);
        REQUIRE(got == expected);
        for (const auto& m : got) REQUIRE_NOTHROW(make_family_triple(p, q, m.r));
      }
    }
  }
}

TEST_CASE("flat_set") {
  const auto s511 = flat_set(5, 11, true);
  CHECK(rs(s511) == std::vector<Int>{31, 37});
  for (const auto& r : s511) {
    CHECK(r.c_oracle == 1);
    CHECK(r.conditions[3]);
  }
  CHECK(flat_set(3, 11).empty());
  CHECK(flat_set(5, 7).empty());

  SUBCASE("agrees with oracle heights") {
    for (auto [p, q] : {std::pair<Int, Int>{5, 11}, {5, 13}, {7, 11}, {7, 13}, {5, 17}, {3, 17}}) {
      std::vector<Int> oracle_flat;
      for (const auto& m : family_members(p, q))
        if (height_of(inverse_cyclotomic(p * q * m.r)) == 1) oracle_flat.push_back(m.r);
      CHECK(rs(flat_set(p, q)) == oracle_flat);
    }
  }
}

TEST_CASE("search_records") {
  const auto recs = search_records(5, 7);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].r == 17);
  CHECK(recs[0].c_formula == 2);
  CHECK_FALSE(recs[0].flat);
  CHECK(recs[0].ratio_num == 17);
  CHECK(recs[0].ratio_den == 24);
  CHECK_FALSE(recs[0].c_oracle.has_value());
}

TEST_CASE("tp_family") {
  const TpFamily f52 = tp_family(5, 2);
  CHECK(f52.q == 11);
  CHECK(f52.progression_start == 21);
  CHECK(f52.step == 5);
  CHECK(f52.limit == 40);
  CHECK(rs(tp_family_members(f52)) == std::vector<Int>{31});

  const TpFamily f74 = tp_family(7, 4);
  CHECK(f74.q == 29);
  CHECK(f74.progression_start == 57);
  CHECK(f74.limit == 168);
  const auto members = tp_family_members(f74);
  REQUIRE_FALSE(members.empty());
  CHECK(members.front().r == 71);
  CHECK(members.front().alpha == 6);
  CHECK(members.front().beta == 1);

  CHECK_THROWS_AS(tp_family(5, 3), DomainError);
  CHECK_THROWS_AS(tp_family(5, 0), DomainError);

  SUBCASE("every progression prime is flat through condition (d)") {
    for (Int p : {3, 5, 7, 11, 13}) {
      for (Int t = 1; t <= 30; ++t) {
        if (!is_prime(static_cast<std::uint64_t>(t * p + 1))) continue;
        for (const auto& rec : tp_family_members(tp_family(p, t))) {
          REQUIRE(rec.flat);
          REQUIRE(rec.conditions[3]);
          REQUIRE(rec.q_prime == 1);
          REQUIRE(rec.p_prime == rec.q - t);
        }
      }
    }
  }
}

TEST_CASE("min_ratio_experiment") {
  const RatioExperiment exp = min_ratio_experiment(7, 10);
  REQUIRE(exp.best.has_value());
  CHECK(exp.best->flat);
  CHECK(exp.best->r == 71);
  CHECK(exp.best->q == 29);
  CHECK(exp.below_five_over_p);
  bool has_71 = false;
  for (const auto& rec : exp.per_t_best) {
    CHECK(rec.flat);
    has_71 |= rec.r == 71 && rec.q == 29;
  }
  CHECK(has_71);

  CHECK_FALSE(min_ratio_experiment(7, 0).best.has_value());
  CHECK_THROWS_AS(min_ratio_experiment(5, 10), DomainError);
}

TEST_CASE("triple enumeration") {
  const auto fam = family_triples_up_to(20'000);
  CHECK(fam.size() == 178);
  for (std::size_t i = 1; i < fam.size(); ++i)
    REQUIRE(std::tie(fam[i - 1].p, fam[i - 1].q, fam[i - 1].r) < std::tie(fam[i].p, fam[i].q, fam[i].r));
  CHECK(family_triples_up_to(60'000).size() == 575);
  CHECK(family_triples_up_to(100).empty());

  for (const auto& t : trivial_triples_up_to(20'000)) {
    REQUIRE(t.r > (t.p - 1) * (t.q - 1));
    REQUIRE(t.p * t.q * t.r <= 20'000);
  }
}

TEST_CASE("export") {
  std::ostringstream empty;
  write_csv({}, empty);
  CHECK(empty.str() == std::string(kCsvHeader) + "\n");

  auto recs = flat_set(5, 11);
  recs[0].c_oracle = 1;
  std::ostringstream csv;
  write_csv({recs[1], recs[0]}, csv);
  CHECK(csv.str() == std::string(kCsvHeader) + "\n" +
                         "5,11,31,4,1,9,1,1,1,1,0,0,0,1,31,40\n"
                         "5,11,37,3,2,9,1,1,,1,0,0,0,1,37,40\n");
  CHECK(records_from_csv(csv.str()) == recs);

  std::ostringstream js;
  write_json(recs, js);
  CHECK(records_from_json(js.str()) == recs);
  CHECK(js.str().find("\"C_oracle\": null") != std::string::npos);

  SUBCASE("files") {
    const std::string path = "psiflat_export_test.json";
    export_records(recs, ExportFormat::Json, path);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(records_from_json(buf.str()) == recs);
    std::remove(path.c_str());
    CHECK_THROWS_WITH_AS(export_records(recs, ExportFormat::Csv, "/nonexistent-dir/x.csv"),
                         doctest::Contains("/nonexistent-dir/x.csv"), std::runtime_error);
  }
}

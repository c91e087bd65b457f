#include "psiflat/search.hpp"

#include <algorithm>
#include <string>

#include "psiflat/polynomial.hpp"

namespace psiflat {

PrimeSieve::PrimeSieve(Int limit) : limit_(std::max<Int>(limit, 1)), composite_(static_cast<std::size_t>(limit_) + 1) {
  composite_[0] = true;
  composite_[1] = true;
  for (Int i = 2; i * i <= limit_; ++i) {
    if (composite_[static_cast<std::size_t>(i)]) continue;
    for (Int j = i * i; j <= limit_; j += i) composite_[static_cast<std::size_t>(j)] = true;
  }
}

bool PrimeSieve::contains(Int n) const {
  if (n < 0) return false;
  if (n > limit_) return is_prime(static_cast<std::uint64_t>(n));
  return !composite_[static_cast<std::size_t>(n)];
}

namespace {

constexpr Int kMaxSieve = Int{1} << 26;

void require_prime_pair(Int p, Int q) {
  for (Int n : {p, q})
    if (n < 0 || !is_prime(static_cast<std::uint64_t>(n))) throw DomainError(std::to_string(n) + " is not prime");
  if (p >= q) throw DomainError("expected primes p < q");
}

// a/b < c/d for positive denominators
bool ratio_less(Int a, Int b, Int c, Int d) {
  return static_cast<__int128>(a) * d < static_cast<__int128>(c) * b;
}

}  // namespace

std::vector<FamilyMember> family_members(Int p, Int q, const PrimeSieve& sieve) {
  require_prime_pair(p, q);
  const Int phi = checked_mul(p - 1, q - 1);
  std::vector<FamilyMember> out;
  for (Int r = q + 1; r <= phi; ++r) {
    if (!sieve.contains(r)) continue;
    if (auto rep = decompose_r(p, q, r)) out.push_back({r, rep->alpha, rep->beta});
  }
  return out;
}

std::vector<FamilyMember> family_members(Int p, Int q) {
  require_prime_pair(p, q);
  return family_members(p, q, PrimeSieve(std::min(checked_mul(p - 1, q - 1), kMaxSieve)));
}

SearchRecord make_record(const FamilyTriple& t, bool with_oracle) {
  SearchRecord rec;
  rec.p = t.p;
  rec.q = t.q;
  rec.r = t.r;
  rec.alpha = t.alpha;
  rec.beta = t.beta;
  rec.p_prime = t.p_prime;
  rec.q_prime = t.q_prime;
  rec.c_formula = height_formula(t);
  if (with_oracle) rec.c_oracle = height_of(inverse_cyclotomic(checked_mul(t.pq(), t.r)));
  const FlatnessVerdict v = is_flat(t);
  rec.flat = v.flat;
  rec.conditions = {v.cond_a, v.cond_b, v.cond_c, v.cond_d};
  rec.ratio_num = t.r;
  rec.ratio_den = t.phi_pq;
  return rec;
}

std::vector<SearchRecord> search_records(Int p, Int q, bool with_oracle) {
  std::vector<SearchRecord> out;
  for (const FamilyMember& m : family_members(p, q)) out.push_back(make_record(make_family_triple(p, q, m.r), with_oracle));
  return out;
}

std::vector<SearchRecord> flat_set(Int p, Int q, bool with_oracle) {
  std::vector<SearchRecord> out;
  for (const FamilyMember& m : family_members(p, q)) {
    const FamilyTriple t = make_family_triple(p, q, m.r);
    if (is_flat(t).flat) out.push_back(make_record(t, with_oracle));
  }
  return out;
}

TpFamily tp_family(Int p, Int t) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError("p must be an odd prime");
  if (t < 1) throw DomainError("t must be positive");
  TpFamily fam;
  fam.p = p;
  fam.t = t;
  fam.q = checked_add(checked_mul(t, p), 1);
  if (!is_prime(static_cast<std::uint64_t>(fam.q))) throw DomainError("q = " + std::to_string(fam.q) + " is not prime");
  fam.progression_start = checked_add(checked_mul(2 * t, p), 1);
  fam.step = p;
  fam.limit = checked_mul(p - 1, fam.q - 1);
  return fam;
}

std::vector<SearchRecord> tp_family_members(const TpFamily& family) {
  std::vector<SearchRecord> out;
  for (Int r = family.progression_start; r <= family.limit; r += family.step)
    if (is_prime(static_cast<std::uint64_t>(r))) out.push_back(make_record(make_family_triple(family.p, family.q, r)));
  return out;
}

RatioExperiment min_ratio_experiment(Int p, Int t_max) {
  if (p <= 5 || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError("min_ratio_experiment requires a prime p > 5");
  RatioExperiment exp;
  exp.p = p;
  exp.t_max = t_max;
  for (Int t = 1; t <= t_max; ++t) {
    const Int q = checked_add(checked_mul(t, p), 1);
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    const auto flat = flat_set(p, q);
    if (flat.empty()) continue;
    const auto best_here = std::min_element(flat.begin(), flat.end(), [](const SearchRecord& x, const SearchRecord& y) {
      return ratio_less(x.ratio_num, x.ratio_den, y.ratio_num, y.ratio_den);
    });
    exp.per_t_best.push_back(*best_here);
    if (!exp.best || ratio_less(best_here->ratio_num, best_here->ratio_den, exp.best->ratio_num, exp.best->ratio_den))
      exp.best = *best_here;
  }
  if (exp.best) exp.below_five_over_p = ratio_less(exp.best->ratio_num, exp.best->ratio_den, 5, p);
  return exp;
}

std::vector<FamilyTriple> family_triples_up_to(Int max_pqr) {
  std::vector<FamilyTriple> out;
  if (max_pqr < 3 * 5 * 7) return out;
  const PrimeSieve sieve(std::min(max_pqr / 15, kMaxSieve));
  for (Int p = 3; p * p * p < max_pqr; p += 2) {
    if (!sieve.contains(p)) continue;
    for (Int q = p + 2; p * q * q < max_pqr; q += 2) {
      if (!sieve.contains(q)) continue;
      const Int r_max = std::min((p - 1) * (q - 1), max_pqr / (p * q));
      for (Int r = q + 2; r <= r_max; r += 2)
        if (sieve.contains(r) && decompose_r(p, q, r)) out.push_back(make_family_triple(p, q, r));
    }
  }
  return out;
}

std::vector<PrimeTriple> trivial_triples_up_to(Int max_pqr) {
  std::vector<PrimeTriple> out;
  if (max_pqr < 3 * 5 * 7) return out;
  const PrimeSieve sieve(std::min(max_pqr / 15, kMaxSieve));
  for (Int p = 3; p * p * p < max_pqr; p += 2) {
    if (!sieve.contains(p)) continue;
    for (Int q = p + 2; p * q * q < max_pqr; q += 2) {
      if (!sieve.contains(q)) continue;
      const Int r_min = std::max(q + 1, (p - 1) * (q - 1) + 1);
      for (Int r = r_min; r <= max_pqr / (p * q); ++r)
        if (sieve.contains(r)) out.push_back({p, q, r});
    }
  }
  return out;
}

}  // namespace psiflat

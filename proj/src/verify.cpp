#include "psiflat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "psiflat/coefficients.hpp"
#include "psiflat/height.hpp"
#include "psiflat/polynomial.hpp"
#include "psiflat/search.hpp"

namespace psiflat {

namespace {

constexpr std::size_t kMaxMismatchesPerTriple = 16;

class Recorder {
 public:
  Recorder(Int p, Int q, Int r, TripleCheck& out) : p_(p), q_(q), r_(r), out_(out) {}

  void expect(const char* check, Int expected, Int actual, std::optional<Int> m = std::nullopt) {
    if (expected == actual || out_.mismatches.size() >= kMaxMismatchesPerTriple) return;
    out_.mismatches.push_back({p_, q_, r_, m, check, expected, actual});
  }

  void expect_true(const char* check, bool ok, std::optional<Int> m = std::nullopt) { expect(check, 1, ok ? 1 : 0, m); }

 private:
  Int p_, q_, r_;
  TripleCheck& out_;
};

Int sum(const std::vector<Int>& v) {
  Int s = 0;
  for (Int x : v) s = checked_add(s, x);
  return s;
}

}  // namespace

std::string describe(const Mismatch& mm) {
  std::ostringstream os;
  os << "MISMATCH " << mm.check << " at (p, q, r) = (" << mm.p << ", " << mm.q << ", " << mm.r << ")";
  if (mm.m) os << ", m = " << *mm.m;
  os << ": expected " << mm.expected << ", got " << mm.actual;
  return os.str();
}

TripleCheck verify_family_triple(const FamilyTriple& t) {
  TripleCheck out;
  Recorder rec(t.p, t.q, t.r, out);

  const Int n = t.pq() * t.r;
  rec.expect("deg Psi identity", n - t.phi_pq * (t.r - 1), t.deg_psi);
  rec.expect("tau identity", t.deg_psi - t.qr(), t.tau);

  const auto c_fast = c_coefficients(t, EvalMethod::ClosedForm);
  const auto c_sum = c_coefficients(t, EvalMethod::Summation);
  const auto c_oracle = c_coefficients(t, EvalMethod::Oracle);
  const auto e_fast = e_coefficients(t, EvalMethod::ClosedForm);
  const auto e_oracle = e_coefficients(t, EvalMethod::Oracle);
  out.coefficients = static_cast<Int>(c_fast.size());

  for (Int m = 0; m <= t.deg_psi; ++m) {
    const auto i = static_cast<std::size_t>(m);
    rec.expect("c closed form vs oracle", c_oracle[i], c_fast[i], m);
    rec.expect("c summation vs oracle", c_oracle[i], c_sum[i], m);
    rec.expect("c anti-reciprocity", -c_fast[static_cast<std::size_t>(t.deg_psi - m)], c_fast[i], m);
    rec.expect_true("|c| <= p - 1", std::abs(c_fast[i]) <= t.p - 1, m);
  }
  for (Int m = 0; m <= t.tau; ++m) {
    const auto i = static_cast<std::size_t>(m);
    rec.expect("e closed form vs oracle", e_oracle[i], e_fast[i], m);
    rec.expect("e reciprocity", e_fast[static_cast<std::size_t>(t.tau - m)], e_fast[i], m);
    if (m < t.pr()) rec.expect("e closed form vs summation", e_summation(t, m), e_fast[i], m);
  }
  rec.expect("sum of c", 0, sum(c_fast));
  rec.expect("sum of e", t.p, sum(e_fast));

  Int oracle_height = 0;
  for (Int c : c_oracle) oracle_height = std::max(oracle_height, std::abs(c));
  const Int formula = height_formula(t);
  rec.expect("height formula vs oracle", oracle_height, formula);
  try {
    const HeightReport h = h_witnesses(t);
    rec.expect("witness maximum", formula, std::max(std::abs(*h.e_m1), std::abs(*h.e_m2)));
  } catch (const ConsistencyError&) {
    rec.expect_true("height witnesses", false);
  }
  rec.expect("flat iff height 1", formula == 1 ? 1 : 0, is_flat(t).flat ? 1 : 0);
  if (auto bound = moree_bound(t)) rec.expect_true("Moree bound dominates", formula <= *bound);
  return out;
}

TripleCheck verify_trivial_triple(Int p, Int q, Int r) {
  TripleCheck out;
  Recorder rec(p, q, r, out);
  const IntPolynomial psi = inverse_cyclotomic(checked_mul(p * q, r));
  const Int deg = static_cast<Int>(*psi.degree());
  for (Int m = 0; m <= deg; ++m) rec.expect("trivial case vs oracle", psi[m], c_trivial_case(p, q, r, m), m);
  out.coefficients = deg + 1;
  return out;
}

SweepReport verify_sweep(Int max_pqr, unsigned jobs) {
  const auto family = family_triples_up_to(max_pqr);
  const auto trivial = trivial_triples_up_to(max_pqr);
  const std::size_t total = family.size() + trivial.size();
  std::vector<TripleCheck> results(total);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < total; i = next++) {
        if (i < family.size()) {
          results[i] = verify_family_triple(family[i]);
        } else {
          const PrimeTriple& t = trivial[i - family.size()];
          results[i] = verify_trivial_triple(t.p, t.q, t.r);
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = total;
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 1; k < std::max(jobs, 1u); ++k) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.family_triples = static_cast<Int>(family.size());
  report.trivial_triples = static_cast<Int>(trivial.size());
  for (auto& r : results) {
    report.coefficients += r.coefficients;
    report.mismatches.insert(report.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
  }
  return report;
}

}  // namespace psiflat

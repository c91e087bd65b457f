#include "psiflat/height.hpp"

#include <algorithm>
#include <string>

#include "psiflat/coefficients.hpp"
#include "psiflat/polynomial.hpp"

namespace psiflat {

namespace {

Int positive_peak(const FamilyTriple& t) {
  return std::min(ceil_div(t.p_prime, t.alpha), ceil_div(t.q_prime, t.beta));
}

Int negative_peak(const FamilyTriple& t) {
  return std::min(ceil_div(t.q - t.p_prime, t.alpha), ceil_div(t.p - t.q_prime, t.beta));
}

void require(bool ok, const FamilyTriple& t, const char* what) {
  if (!ok)
    throw ConsistencyError(std::string(what) + " for (p, q, r) = (" + std::to_string(t.p) + ", " +
                           std::to_string(t.q) + ", " + std::to_string(t.r) + ")");
}

}  // namespace

Int height_formula(const FamilyTriple& t) { return std::max(positive_peak(t), negative_peak(t)); }

HeightReport h_witnesses(const FamilyTriple& t, const HeightOptions& options) {
  HeightReport rep;
  rep.c_formula = height_formula(t);
  rep.positive_peak = positive_peak(t);
  rep.negative_peak = negative_peak(t);
  rep.h_formula = std::max(rep.positive_peak, rep.negative_peak);
  rep.m1 = (rep.positive_peak - 1) * t.r;
  rep.m2 = (rep.negative_peak - 1) * t.r + 1;

  if (options.verify_witnesses) {
    require(rep.c_formula == rep.h_formula, t, "height of Psi differs from height of f");
    require(rep.m1 < t.pq() && rep.m2 < t.pq(), t, "witness exponent not below pq");
    rep.e_m1 = e_closed(t, rep.m1);
    rep.e_m2 = e_closed(t, rep.m2);
    require(*rep.e_m1 == rep.positive_peak, t, "e(m1) does not attain the positive peak");
    require(*rep.e_m2 == -rep.negative_peak, t, "e(m2) does not attain the negative peak");
  }
  if (options.with_oracle) {
    rep.c_oracle = height_of(inverse_cyclotomic(checked_mul(t.pq(), t.r)));
    require(*rep.c_oracle == rep.c_formula, t, "oracle height differs from the formula");
  }
  return rep;
}

FlatnessVerdict is_flat(const FamilyTriple& t) {
  FlatnessVerdict v;
  const Int pp = t.p_prime;
  const Int qq = t.q_prime;
  v.cond_a = t.alpha >= std::max(pp, t.q - pp);
  v.cond_b = t.beta >= std::max(qq, t.p - qq);
  v.cond_c = t.alpha >= pp && t.beta >= t.p - qq;
  v.cond_d = t.alpha >= t.q - pp && t.beta >= qq;
  v.flat = v.cond_a || v.cond_b || v.cond_c || v.cond_d;
  return v;
}

std::optional<Int> moree_bound(const FamilyTriple& t) {
  if (t.deg_psi >= checked_mul(2, t.qr())) return std::nullopt;
  return std::max(std::min(t.p_prime, t.q_prime), std::min(t.q - t.p_prime, t.p - t.q_prime));
}

}  // namespace psiflat

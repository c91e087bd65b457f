#pragma once

#include <optional>

#include "psiflat/numtheory.hpp"

namespace psiflat {

/// Height of Psi_{pqr} for a family triple:
///   max{ min{ceil(p'/alpha), ceil(q'/beta)}, min{ceil((q-p')/alpha), ceil((p-q')/beta)} }.
Int height_formula(const FamilyTriple& t);

/// Height data for a family triple.
///
/// The height of f is attained at two witness exponents below pq: `m1`, where
/// e(m1) = positive_peak >= 0, and `m2`, where e(m2) = -negative_peak <= 0.
/// Since f is reciprocal and tau < 2qr, the same height carries over to Psi.
struct HeightReport {
  Int c_formula = 0;      // height of Psi by the closed formula
  Int h_formula = 0;      // max(positive_peak, negative_peak)
  Int positive_peak = 0;  // min{ceil(p'/alpha), ceil(q'/beta)}
  Int negative_peak = 0;  // min{ceil((q-p')/alpha), ceil((p-q')/beta)}
  Int m1 = 0;
  Int m2 = 0;
  std::optional<Int> e_m1;      // filled when witnesses are verified
  std::optional<Int> e_m2;
  std::optional<Int> c_oracle;  // filled when the oracle was run
};

struct HeightOptions {
  bool verify_witnesses = true;
  bool with_oracle = false;
};

/// Builds the report. With verify_witnesses, evaluates e at m1 and m2 and
/// throws ConsistencyError unless every report invariant holds; with_oracle
/// also builds Psi_{pqr} and throws if its height disagrees.
HeightReport h_witnesses(const FamilyTriple& t, const HeightOptions& options = {});

struct FlatnessVerdict {
  bool flat = false;
  bool cond_a = false;  // alpha >= max{p', q - p'}
  bool cond_b = false;  // beta >= max{q', p - q'}
  bool cond_c = false;  // alpha >= p' and beta >= p - q'
  bool cond_d = false;  // alpha >= q - p' and beta >= q'

  friend bool operator==(const FlatnessVerdict&, const FlatnessVerdict&) = default;
};

FlatnessVerdict is_flat(const FamilyTriple& t);

/// Moree's bound max{min{p', q'}, min{q - p', p - q'}} on C(pqr), which
/// applies only when deg Psi_{pqr} < 2qr; nullopt otherwise.
std::optional<Int> moree_bound(const FamilyTriple& t);

/// C(pqr) <= p - 1 for every ternary Psi_{pqr}.
inline Int moree_global_bound(const FamilyTriple& t) { return t.p - 1; }

}  // namespace psiflat

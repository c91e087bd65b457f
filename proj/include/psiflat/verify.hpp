#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psiflat/numtheory.hpp"

namespace psiflat {

struct Mismatch {
  Int p = 0;
  Int q = 0;
  Int r = 0;
  std::optional<Int> m;  // coefficient index, when the check is per coefficient
  std::string check;
  Int expected = 0;
  Int actual = 0;
};

std::string describe(const Mismatch& mismatch);

struct TripleCheck {
  Int coefficients = 0;
  std::vector<Mismatch> mismatches;
};

/// Cross-checks every engine against the polynomial oracle for one family
/// triple, plus the structural identities (reciprocity, sums, degrees,
/// height and flatness formulas, Moree's bounds).
TripleCheck verify_family_triple(const FamilyTriple& t);

/// Trivial-case engine against the oracle, for r > phi(pq).
TripleCheck verify_trivial_triple(Int p, Int q, Int r);

struct SweepReport {
  Int family_triples = 0;
  Int trivial_triples = 0;
  Int coefficients = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Runs both checks over every triple with pqr <= max_pqr using `jobs`
/// worker threads. The report is independent of `jobs`.
SweepReport verify_sweep(Int max_pqr, unsigned jobs = 1);

}  // namespace psiflat

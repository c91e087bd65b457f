#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "psiflat/numtheory.hpp"

namespace psiflat {

enum class EvalMethod { ClosedForm, Summation, Oracle };

std::string_view to_string(EvalMethod method);

/// Coefficient of x^m in Phi_pq, from the (u, v) decomposition of m mod pq.
/// Zero outside [0, phi(pq)].
Int a_pq(const PrimePair& pair, Int m);
Int a_pq(Int p, Int q, Int m);

/// Coefficient of x^a in the binary Psi_pq = (x^p - 1)(x^q - 1)/(x - 1).
Int c_pq(Int p, Int q, Int a);

/// e(m) = sum_{j=0}^{floor(m/r)} a_pq(m - j r), valid for 0 <= m < pr.
Int e_summation(const FamilyTriple& t, Int m);

/// Intermediate quantities of the wrapped branch (b + pq = u p + v q).
struct WrappedCaseTrace {
  Int j0 = 0;
  Int a_star = 0;
  Int u_star = 0;
  Int v_star = 0;
  Int e_plus = 0;
  Int e_minus = 0;
};

/// How e_closed arrived at its value: the index after the reciprocity and
/// period-r reductions, its split m = (a-1) r + b, and the decomposition of b.
struct ClosedFormTrace {
  Int reduced_m = 0;
  Int a = 0;
  Int b = 0;
  Decomposition decomposition;
  std::optional<WrappedCaseTrace> wrapped;
  Int value = 0;
};

/// Closed-form e(m) for any integer m; zero outside [0, tau].
/// `trace` stays empty when m is outside the support.
Int e_closed(const FamilyTriple& t, Int m, ClosedFormTrace* trace = nullptr);

/// e(m) through the summation engine, extended to all m by reciprocity.
Int e_summation_extended(const FamilyTriple& t, Int m);

/// Coefficient of x^m in Psi_{pqr}: e(m - qr) - e(m), for 0 <= m <= deg Psi.
/// The Oracle method builds the full polynomial on every call; prefer
/// c_coefficients for bulk work.
Int c_coeff(const FamilyTriple& t, Int m, EvalMethod method = EvalMethod::ClosedForm);

/// All coefficients c(0..deg Psi) using a single engine.
std::vector<Int> c_coefficients(const FamilyTriple& t, EvalMethod method);

/// All coefficients e(0..tau) using a single engine.
std::vector<Int> e_coefficients(const FamilyTriple& t, EvalMethod method);

/// Coefficients of Psi_{pqr} for r > phi(pq) via Psi_{pqr}(x) = Psi_pq(x^r) Phi_pq(x):
/// c(a r + b) = a_pq(b) c_pq(a). Requires primes p < q < r.
Int c_trivial_case(Int p, Int q, Int r, Int m);

}  // namespace psiflat

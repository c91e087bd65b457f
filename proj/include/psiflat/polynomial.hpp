#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "psiflat/numtheory.hpp"

namespace psiflat {

/// Dense polynomial with exact 64-bit integer coefficients, index = exponent.
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  /// c * x^k
  static IntPolynomial monomial(Int c, std::size_t k);
  /// x^d - 1
  static IntPolynomial x_pow_minus_one(std::size_t d);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const;

  /// Coefficient of x^k; zero outside the stored range (including k < 0).
  Int operator[](std::int64_t k) const;

  std::span<const Int> coefficients() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Int evaluate_at_one() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<Int> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g);

/// Quotient of f by g. Throws InexactDivisionError when the remainder is
/// nonzero and DomainError when g is zero. Cost is proportional to
/// deg(f/g) times the number of nonzero terms of g.
IntPolynomial poly_exact_div(const IntPolynomial& f, const IntPolynomial& g);

/// max |coefficient|, 0 for the zero polynomial.
Int height_of(const IntPolynomial& f);

/// `c*x^k` terms in ascending exponent order, space separated, zeros omitted.
/// The zero polynomial prints as `0`.
std::string format_sparse(const IntPolynomial& f);

inline constexpr std::size_t kDefaultDegreeBudget = std::size_t{1} << 20;

/// Upper bound on the index n accepted by the Phi_n / Psi_n constructors.
struct OracleLimits {
  std::size_t degree_budget = kDefaultDegreeBudget;
};

/// Moebius function by trial division.
int moebius(Int n);
std::vector<Int> divisors(Int n);

/// Phi_n as prod_{d | n} (x^d - 1)^{mu(n/d)}: every factor is a binomial, and
/// each division is an exact, remainder-checked long division.
IntPolynomial cyclotomic(Int n, const OracleLimits& limits = {});

/// Thread-safe memo table for cyclotomic_by_divisors. All writers store the
/// same value for a key, so concurrent inserts are harmless.
class CyclotomicCache {
 public:
  std::optional<IntPolynomial> find(Int n) const;
  void store(Int n, const IntPolynomial& poly);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<Int, IntPolynomial> table_;
};

/// Phi_n as (x^n - 1) divided successively by Phi_d for every proper divisor
/// d of n, recursively and memoized. Quadratic; meant for cross-checking
/// cyclotomic() on small n.
IntPolynomial cyclotomic_by_divisors(Int n, CyclotomicCache& cache, const OracleLimits& limits = {});

/// Psi_n = (x^n - 1) / Phi_n, evaluated as (x^n - 1) * prod_{d | n} (x^d - 1)^{-mu(n/d)}.
IntPolynomial inverse_cyclotomic(Int n, const OracleLimits& limits = {});

/// The inverse inclusion-exclusion polynomial
///   -(1-x)(1-x^{qr})(1-x^{rp})(1-x^{pq}) / ((1-x^p)(1-x^q)(1-x^r))
/// for pairwise coprime p, q, r >= 2. Equals Psi_{pqr} for primes.
IntPolynomial psi_product_form(Int p, Int q, Int r, const OracleLimits& limits = {});

/// f(x) = (1 + x^r + ... + x^{(p-1)r}) * Phi_{pq}(x).
IntPolynomial f_polynomial(const FamilyTriple& t, const OracleLimits& limits = {});

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f);

}  // namespace psiflat

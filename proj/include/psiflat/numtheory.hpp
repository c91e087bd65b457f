#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>

#include "psiflat/errors.hpp"

namespace psiflat {

using Int = std::int64_t;

// Checked arithmetic. Every helper throws OverflowError instead of wrapping.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Mathematical ceiling of num / den for den > 0 (so ceil_div(-1, 2) == 0).
constexpr Int ceil_div(Int num, Int den) {
  const Int q = num / den;
  return (num % den != 0 && num > 0) ? q + 1 : q;
}

/// max(0, min(values)). `values` must be nonempty.
Int min_geq0(std::initializer_list<Int> values);

Int gcd(Int a, Int b);

/// Deterministic over the whole unsigned 64-bit range (Miller-Rabin with a
/// fixed witness set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// x in [1, m-1] with a*x = 1 (mod m). Throws DomainError if gcd(a, m) != 1.
Int mod_inverse(Int a, Int m);

/// b written as u*p + v*q (wrapped == false) or u*p + v*q - pq (wrapped == true)
/// with 0 <= u < q and 0 <= v < p. Exactly one form exists for 0 <= b < pq.
struct Decomposition {
  Int u = 0;
  Int v = 0;
  bool wrapped = false;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Two coprime moduli with their mutual inverses: p*p_prime = 1 (mod q),
/// q*q_prime = 1 (mod p). Note p*p_prime + q*q_prime = p*q + 1.
struct PrimePair {
  Int p = 0;
  Int q = 0;
  Int p_prime = 0;
  Int q_prime = 0;
};

PrimePair make_prime_pair(Int p, Int q);

Decomposition decompose_mod_pq(Int b, Int p, Int q);
Decomposition decompose_mod_pq(Int b, const PrimePair& pair);

struct LinearRepresentation {
  Int alpha = 0;
  Int beta = 0;

  friend bool operator==(const LinearRepresentation&, const LinearRepresentation&) = default;
};

/// The unique r = alpha*p + beta*q with alpha, beta >= 1, or nullopt if r has
/// no such representation. Requires p < q < r <= (p-1)(q-1).
std::optional<LinearRepresentation> decompose_r(Int p, Int q, Int r);

/// A validated member of the family r = alpha*p + beta*q <= phi(pq) together
/// with every constant the coefficient formulas need.
struct FamilyTriple {
  Int p = 0;
  Int q = 0;
  Int r = 0;
  Int alpha = 0;
  Int beta = 0;
  Int p_prime = 0;  // inverse of p modulo q, in [1, q-1]
  Int q_prime = 0;  // inverse of q modulo p, in [1, p-1]
  Int phi_pq = 0;   // (p-1)(q-1)
  Int tau = 0;      // degree of f = (p-1)(q+r-1)
  Int deg_psi = 0;  // pq + qr + rp - p - q - r + 1

  PrimePair pair() const { return {p, q, p_prime, q_prime}; }
  Int pq() const { return p * q; }
  Int pr() const { return p * r; }
  Int qr() const { return q * r; }

  friend bool operator==(const FamilyTriple&, const FamilyTriple&) = default;
};

enum class TripleFault { NotPrime, BadOrder, ExceedsPhi, NotRepresentable };

class TripleError : public DomainError {
 public:
  TripleError(TripleFault fault, const std::string& what) : DomainError(what), fault_(fault) {}
  TripleFault fault() const noexcept { return fault_; }

 private:
  TripleFault fault_;
};

/// Validates (p, q, r) and fills the derived fields. Faults are reported in the
/// order NotPrime, BadOrder (requires 3 <= p < q < r), ExceedsPhi, NotRepresentable.
FamilyTriple make_family_triple(Int p, Int q, Int r);

}  // namespace psiflat

#include "psiflat/numtheory.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace psiflat {

Int checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

Int checked_sub(Int a, Int b) {
  Int out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

Int min_geq0(std::initializer_list<Int> values) {
  if (values.size() == 0) throw DomainError("min_geq0 of an empty set");
  return std::max<Int>(0, std::min(values));
}

Int gcd(Int a, Int b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > witness. True if n is a strong probable prime to base a.
bool strong_probable_prime(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  if (n < 37 * 37) return true;

  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // The first 12 primes as witnesses are exact for n < 3.3e24.
  return std::all_of(kWitnesses.begin(), kWitnesses.end(),
                     [&](u64 a) { return strong_probable_prime(n, a, d, s); });
}

Int mod_inverse(Int a, Int m) {
  if (m < 2) throw DomainError("mod_inverse: modulus must be at least 2");
  Int old_r = ((a % m) + m) % m, r = m;
  Int old_s = 1, s = 0;
  while (r != 0) {
    const Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw DomainError("mod_inverse: arguments are not coprime");
  return ((old_s % m) + m) % m;
}

PrimePair make_prime_pair(Int p, Int q) {
  if (p < 2 || q < 2 || p == q) throw DomainError("expected two distinct moduli >= 2");
  if (gcd(p, q) != 1) throw DomainError("moduli must be coprime");
  return {p, q, mod_inverse(p, q), mod_inverse(q, p)};
}

Decomposition decompose_mod_pq(Int b, const PrimePair& pair) {
  const Int pq = checked_mul(pair.p, pair.q);
  if (b < 0 || b >= pq) throw DomainError("decompose_mod_pq: residue out of [0, pq)");
  Decomposition d;
  d.u = static_cast<Int>(static_cast<__int128>(b) * pair.p_prime % pair.q);
  d.v = static_cast<Int>(static_cast<__int128>(b) * pair.q_prime % pair.p);
  d.wrapped = d.u * pair.p + d.v * pair.q >= pq;
  return d;
}

Decomposition decompose_mod_pq(Int b, Int p, Int q) { return decompose_mod_pq(b, make_prime_pair(p, q)); }

std::optional<LinearRepresentation> decompose_r(Int p, Int q, Int r) {
  if (!(p < q && q < r)) throw DomainError("decompose_r: requires p < q < r");
  const Int phi = checked_mul(p - 1, q - 1);
  if (r > phi) throw DomainError("decompose_r: r exceeds phi(pq)");
  const PrimePair pair = make_prime_pair(p, q);
  const Int beta = static_cast<Int>(static_cast<__int128>(r) * pair.q_prime % p);
  if (beta == 0) return std::nullopt;
  const Int rest = r - beta * q;
  if (rest <= 0) return std::nullopt;
  // rest is divisible by p because beta*q = r (mod p).
  return LinearRepresentation{rest / p, beta};
}

FamilyTriple make_family_triple(Int p, Int q, Int r) {
  for (Int n : {p, q, r}) {
    if (n < 0 || !is_prime(static_cast<std::uint64_t>(n)))
      throw TripleError(TripleFault::NotPrime, std::to_string(n) + " is not prime");
  }
  if (!(3 <= p && p < q && q < r))
    throw TripleError(TripleFault::BadOrder, "expected odd primes 3 <= p < q < r");

  FamilyTriple t;
  t.p = p;
  t.q = q;
  t.r = r;
  t.phi_pq = checked_mul(p - 1, q - 1);
  if (r > t.phi_pq)
    throw TripleError(TripleFault::ExceedsPhi,
                      "r = " + std::to_string(r) + " exceeds phi(pq) = " + std::to_string(t.phi_pq));

  const auto rep = decompose_r(p, q, r);
  if (!rep)
    throw TripleError(TripleFault::NotRepresentable,
                      "r = " + std::to_string(r) + " is not representable as alpha*p + beta*q with alpha, beta > 0");
  t.alpha = rep->alpha;
  t.beta = rep->beta;

  const PrimePair pair = make_prime_pair(p, q);
  t.p_prime = pair.p_prime;
  t.q_prime = pair.q_prime;
  t.tau = checked_mul(p - 1, checked_sub(checked_add(q, r), 1));
  const Int pq = checked_mul(p, q);
  const Int qr = checked_mul(q, r);
  const Int rp = checked_mul(r, p);
  t.deg_psi = checked_add(checked_sub(checked_add(checked_add(pq, qr), rp), p + q + r), 1);
  return t;
}

}  // namespace psiflat

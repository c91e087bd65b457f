#include "psiflat/coefficients.hpp"

#include <algorithm>
#include <string>

#include "psiflat/polynomial.hpp"

namespace psiflat {

std::string_view to_string(EvalMethod method) {
  switch (method) {
    case EvalMethod::ClosedForm: return "fast";
    case EvalMethod::Summation: return "sum";
    case EvalMethod::Oracle: return "oracle";
  }
  return "?";
}

Int a_pq(const PrimePair& pair, Int m) {
  const Int phi = (pair.p - 1) * (pair.q - 1);
  if (m < 0 || m > phi) return 0;
  const Decomposition d = decompose_mod_pq(m, pair);
  if (d.u < pair.p_prime && d.v < pair.q_prime) return 1;
  if (d.u >= pair.p_prime && d.v >= pair.q_prime) return -1;
  return 0;
}

Int a_pq(Int p, Int q, Int m) { return a_pq(make_prime_pair(p, q), m); }

Int c_pq(Int p, Int q, Int a) {
  const Int lo = std::min(p, q);
  const Int hi = std::max(p, q);
  if (0 <= a && a < lo) return -1;
  if (hi <= a && a <= lo + hi - 1) return 1;
  return 0;
}

Int e_summation(const FamilyTriple& t, Int m) {
  if (m < 0 || m >= t.pr()) throw DomainError("e_summation: index must lie in [0, pr)");
  const PrimePair pair = t.pair();
  Int sum = 0;
  for (Int k = m; k >= 0; k -= t.r) sum += a_pq(pair, k);
  return sum;
}

Int e_summation_extended(const FamilyTriple& t, Int m) {
  if (m < 0 || m > t.tau) return 0;
  if (m >= t.pr()) m = t.tau - m;
  return e_summation(t, m);
}

Int e_closed(const FamilyTriple& t, Int m, ClosedFormTrace* trace) {
  if (m < 0 || m > t.tau) return 0;

  const Int pq = t.pq();
  if (m >= t.pr()) m = t.tau - m;                   // reciprocity of f; lands below pq
  if (m > pq) m -= t.r * ceil_div(m - pq, t.r);     // period r beyond deg Phi_pq
  if (m == pq) m = pq - t.r;                        // a_pq(pq) = 0

  const Int a = m / t.r + 1;
  const Int b = m % t.r;
  const Decomposition dec = decompose_mod_pq(b, t.pair());
  const Int u = dec.u;
  const Int v = dec.v;
  const Int up = ceil_div(t.p_prime - u, t.alpha);
  const Int vq = ceil_div(t.q_prime - v, t.beta);

  Int value = 0;
  std::optional<WrappedCaseTrace> wrapped;
  if (!dec.wrapped) {
    value = min_geq0({a, up, vq});
  } else {
    WrappedCaseTrace w;
    const Int ju = ceil_div(t.q - u, t.alpha);
    const Int jv = ceil_div(t.p - v, t.beta);
    w.j0 = std::min(ju, jv);
    w.a_star = a - w.j0;
    if (w.j0 == ju) {
      // A tie would put b + j0 r at or above pq, so it can only happen past a.
      if (ju == jv && w.j0 < a) throw ConsistencyError("branch tie with j0 < a");
      w.u_star = u + w.j0 * t.alpha - t.q;
      w.v_star = v + w.j0 * t.beta;
    } else {
      w.u_star = u + w.j0 * t.alpha;
      w.v_star = v + w.j0 * t.beta - t.p;
    }
    w.e_plus = min_geq0({w.a_star, ceil_div(t.p_prime - w.u_star, t.alpha), ceil_div(t.q_prime - w.v_star, t.beta)});
    w.e_minus = min_geq0({std::min({a, ju, jv}) - std::max({Int{0}, up, vq})});
    value = w.e_plus - w.e_minus;
    wrapped = w;
  }

  if (trace != nullptr) *trace = ClosedFormTrace{m, a, b, dec, wrapped, value};
  return value;
}

namespace {

void check_c_index(const FamilyTriple& t, Int m) {
  if (m < 0 || m > t.deg_psi)
    throw DomainError("coefficient index " + std::to_string(m) + " outside [0, " + std::to_string(t.deg_psi) + "]");
}

IntPolynomial oracle_psi(const FamilyTriple& t) {
  IntPolynomial psi = inverse_cyclotomic(checked_mul(t.pq(), t.r));
  if (psi.degree() != static_cast<std::size_t>(t.deg_psi))
    throw ConsistencyError("oracle Psi has unexpected degree");
  return psi;
}

}  // namespace

Int c_coeff(const FamilyTriple& t, Int m, EvalMethod method) {
  check_c_index(t, m);
  switch (method) {
    case EvalMethod::ClosedForm: return e_closed(t, m - t.qr()) - e_closed(t, m);
    case EvalMethod::Summation: return e_summation_extended(t, m - t.qr()) - e_summation_extended(t, m);
    case EvalMethod::Oracle: return oracle_psi(t)[m];
  }
  throw DomainError("unknown evaluation method");
}

std::vector<Int> c_coefficients(const FamilyTriple& t, EvalMethod method) {
  std::vector<Int> out(static_cast<std::size_t>(t.deg_psi + 1));
  if (method == EvalMethod::Oracle) {
    const IntPolynomial psi = oracle_psi(t);
    for (Int m = 0; m <= t.deg_psi; ++m) out[static_cast<std::size_t>(m)] = psi[m];
    return out;
  }
  // e is shared by both terms of the difference, so tabulate it once.
  const std::vector<Int> e = e_coefficients(t, method);
  auto e_at = [&](Int k) { return (k < 0 || k > t.tau) ? Int{0} : e[static_cast<std::size_t>(k)]; };
  for (Int m = 0; m <= t.deg_psi; ++m) out[static_cast<std::size_t>(m)] = e_at(m - t.qr()) - e_at(m);
  return out;
}

std::vector<Int> e_coefficients(const FamilyTriple& t, EvalMethod method) {
  std::vector<Int> out(static_cast<std::size_t>(t.tau + 1));
  switch (method) {
    case EvalMethod::ClosedForm:
      for (Int m = 0; m <= t.tau; ++m) out[static_cast<std::size_t>(m)] = e_closed(t, m);
      break;
    case EvalMethod::Summation:
      for (Int m = 0; m <= t.tau; ++m) out[static_cast<std::size_t>(m)] = e_summation_extended(t, m);
      break;
    case EvalMethod::Oracle: {
      const IntPolynomial f = f_polynomial(t);
      if (f.degree() != static_cast<std::size_t>(t.tau)) throw ConsistencyError("oracle f has unexpected degree");
      for (Int m = 0; m <= t.tau; ++m) out[static_cast<std::size_t>(m)] = f[m];
      break;
    }
  }
  return out;
}

Int c_trivial_case(Int p, Int q, Int r, Int m) {
  for (Int n : {p, q, r})
    if (n < 0 || !is_prime(static_cast<std::uint64_t>(n))) throw DomainError(std::to_string(n) + " is not prime");
  if (!(p < q && q < r)) throw DomainError("expected primes p < q < r");
  const Int phi = checked_mul(p - 1, q - 1);
  if (r <= phi) throw DomainError("r <= phi(pq): the trivial-case identity does not separate coefficients");
  const Int deg = checked_sub(checked_mul(checked_mul(p, q), r), checked_mul(phi, r - 1));
  if (m < 0 || m > deg)
    throw DomainError("coefficient index " + std::to_string(m) + " outside [0, " + std::to_string(deg) + "]");
  return a_pq(make_prime_pair(p, q), m % r) * c_pq(p, q, m / r);
}

}  // namespace psiflat

#include "psiflat/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

namespace psiflat {

namespace {

struct Term {
  std::size_t exponent;
  Int coeff;
};

std::vector<Term> nonzero_terms(std::span<const Int> coeffs) {
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) out.push_back({k, coeffs[k]});
  return out;
}

void check_budget(Int n, const OracleLimits& limits) {
  if (n < 1) throw DomainError("index must be a positive integer");
  if (static_cast<std::uint64_t>(n) > limits.degree_budget)
    throw OverflowError("degree budget exceeded: " + std::to_string(n) + " > " +
                        std::to_string(limits.degree_budget));
}

IntPolynomial one_minus_x_pow(std::size_t k) {
  std::vector<Int> c(k + 1, 0);
  c[0] += 1;
  c[k] -= 1;
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(Int c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Int> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t d) {
  if (d == 0) return {};
  std::vector<Int> v(d + 1, 0);
  v[0] = -1;
  v[d] = 1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Int IntPolynomial::operator[](std::int64_t k) const {
  if (k < 0 || static_cast<std::uint64_t>(k) >= coeffs_.size()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Int IntPolynomial::evaluate_at_one() const {
  Int sum = 0;
  for (Int c : coeffs_) sum = checked_add(sum, c);
  return sum;
}

IntPolynomial poly_mul(const IntPolynomial& f, const IntPolynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  // Iterate over the sparser operand's nonzero terms.
  const bool f_sparser = std::count(f.coefficients().begin(), f.coefficients().end(), 0) >
                         std::count(g.coefficients().begin(), g.coefficients().end(), 0);
  const IntPolynomial& dense = f_sparser ? g : f;
  const IntPolynomial& sparse = f_sparser ? f : g;

  std::vector<Int> out(f.size() + g.size() - 1, 0);
  const auto dc = dense.coefficients();
  for (const Term& t : nonzero_terms(sparse.coefficients())) {
    for (std::size_t i = 0; i < dc.size(); ++i) {
      if (dc[i] == 0) continue;
      Int& slot = out[i + t.exponent];
      slot = checked_add(slot, checked_mul(dc[i], t.coeff));
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial poly_exact_div(const IntPolynomial& f, const IntPolynomial& g) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.is_zero()) return {};
  if (f.size() < g.size()) throw InexactDivisionError();

  const std::size_t dg = g.size() - 1;
  const Int lead = g.coefficients()[dg];
  std::vector<Term> lower;  // nonzero terms of g below the leading one
  for (const Term& t : nonzero_terms(g.coefficients()))
    if (t.exponent < dg) lower.push_back(t);

  std::vector<Int> rem(f.coefficients().begin(), f.coefficients().end());
  std::vector<Int> quot(f.size() - dg, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const Int top = rem[i + dg];
    if (top == 0) continue;
    if (top % lead != 0) throw InexactDivisionError();
    const Int h = top / lead;
    quot[i] = h;
    rem[i + dg] = 0;
    for (const Term& t : lower) {
      Int& slot = rem[i + t.exponent];
      slot = checked_sub(slot, checked_mul(h, t.coeff));
    }
  }
  for (std::size_t k = 0; k < dg; ++k)
    if (rem[k] != 0) throw InexactDivisionError();
  return IntPolynomial(std::move(quot));
}

Int height_of(const IntPolynomial& f) {
  Int h = 0;
  for (Int c : f.coefficients()) {
    if (c == std::numeric_limits<Int>::min()) throw OverflowError("coefficient magnitude overflows");
    h = std::max(h, c < 0 ? -c : c);
  }
  return h;
}

std::string format_sparse(const IntPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto c = f.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    if (!first) os << ' ';
    os << c[k] << "*x^" << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& f) { return os << format_sparse(f); }

int moebius(Int n) {
  if (n < 1) throw DomainError("moebius: n must be positive");
  int mu = 1;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<Int> divisors(Int n) {
  if (n < 1) throw DomainError("divisors: n must be positive");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

namespace {

// prod over d | n of (x^d - 1)^{sign * mu(n/d)}, times `seed`.
IntPolynomial binomial_product(Int n, int sign, IntPolynomial seed) {
  std::vector<Int> up, down;
  for (Int d : divisors(n)) {
    const int e = sign * moebius(n / d);
    if (e > 0) up.push_back(d);
    if (e < 0) down.push_back(d);
  }
  // All multiplications first: every partial quotient below stays a polynomial.
  for (Int d : up) seed = poly_mul(seed, IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d)));
  for (Int d : down) seed = poly_exact_div(seed, IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(d)));
  return seed;
}

}  // namespace

IntPolynomial cyclotomic(Int n, const OracleLimits& limits) {
  check_budget(n, limits);
  return binomial_product(n, +1, IntPolynomial::monomial(1, 0));
}

std::optional<IntPolynomial> CyclotomicCache::find(Int n) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(n);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void CyclotomicCache::store(Int n, const IntPolynomial& poly) {
  std::lock_guard lock(mutex_);
  table_.insert_or_assign(n, poly);
}

std::size_t CyclotomicCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

IntPolynomial cyclotomic_by_divisors(Int n, CyclotomicCache& cache, const OracleLimits& limits) {
  check_budget(n, limits);
  if (auto hit = cache.find(n)) return *hit;
  IntPolynomial result = IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(n));
  for (Int d : divisors(n)) {
    if (d == n) break;
    result = poly_exact_div(result, cyclotomic_by_divisors(d, cache, limits));
  }
  cache.store(n, result);
  return result;
}

IntPolynomial inverse_cyclotomic(Int n, const OracleLimits& limits) {
  check_budget(n, limits);
  return binomial_product(n, -1, IntPolynomial::x_pow_minus_one(static_cast<std::size_t>(n)));
}

IntPolynomial psi_product_form(Int p, Int q, Int r, const OracleLimits& limits) {
  if (p < 2 || q < 2 || r < 2) throw DomainError("psi_product_form: arguments must be >= 2");
  if (gcd(p, q) != 1 || gcd(q, r) != 1 || gcd(r, p) != 1)
    throw DomainError("psi_product_form: arguments are not pairwise coprime");
  const Int qr = checked_mul(q, r);
  const Int rp = checked_mul(r, p);
  const Int pq = checked_mul(p, q);
  check_budget(checked_add(checked_add(qr, rp), checked_add(pq, 1)), limits);

  auto factor = [](Int k) { return one_minus_x_pow(static_cast<std::size_t>(k)); };
  IntPolynomial num = poly_mul(poly_mul(factor(1), factor(qr)), poly_mul(factor(rp), factor(pq)));
  num = poly_mul(num, IntPolynomial::monomial(-1, 0));
  for (Int k : {p, q, r}) num = poly_exact_div(num, factor(k));
  return num;
}

IntPolynomial f_polynomial(const FamilyTriple& t, const OracleLimits& limits) {
  std::vector<Int> geometric(static_cast<std::size_t>((t.p - 1) * t.r + 1), 0);
  for (Int j = 0; j < t.p; ++j) geometric[static_cast<std::size_t>(j * t.r)] = 1;
  return poly_mul(IntPolynomial(std::move(geometric)), cyclotomic(t.pq(), limits));
}

}  // namespace psiflat

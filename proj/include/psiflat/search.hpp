#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "psiflat/height.hpp"
#include "psiflat/numtheory.hpp"

namespace psiflat {

/// Sieve of Eratosthenes over [0, limit].
class PrimeSieve {
 public:
  explicit PrimeSieve(Int limit);

  Int limit() const { return limit_; }
  /// Falls back to is_prime() above the sieved range.
  bool contains(Int n) const;

 private:
  Int limit_;
  std::vector<bool> composite_;
};

struct FamilyMember {
  Int r = 0;
  Int alpha = 0;
  Int beta = 0;

  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

/// Every prime r in (q, phi(pq)] with r = alpha*p + beta*q, alpha, beta >= 1,
/// ascending by r. p and q must be primes with p < q.
std::vector<FamilyMember> family_members(Int p, Int q);
std::vector<FamilyMember> family_members(Int p, Int q, const PrimeSieve& sieve);

struct SearchRecord {
  Int p = 0;
  Int q = 0;
  Int r = 0;
  Int alpha = 0;
  Int beta = 0;
  Int p_prime = 0;
  Int q_prime = 0;
  Int c_formula = 0;
  std::optional<Int> c_oracle;
  bool flat = false;
  std::array<bool, 4> conditions{};  // (a), (b), (c), (d)
  Int ratio_num = 0;  // r
  Int ratio_den = 0;  // phi(pq)

  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

SearchRecord make_record(const FamilyTriple& t, bool with_oracle = false);

/// One record per family member of (p, q), ascending by r.
std::vector<SearchRecord> search_records(Int p, Int q, bool with_oracle = false);

/// The flat members S(p, q), ascending by r.
std::vector<SearchRecord> flat_set(Int p, Int q, bool with_oracle = false);

/// q = t p + 1 prime. Every prime r = 1 (mod p) in [2tp + 1, phi(pq)] is a
/// flat family member through condition (d).
struct TpFamily {
  Int p = 0;
  Int t = 0;
  Int q = 0;
  Int progression_start = 0;  // 2tp + 1
  Int step = 0;               // p
  Int limit = 0;              // phi(pq)
};

TpFamily tp_family(Int p, Int t);

/// Records for the primes of the family's progression, ascending by r.
std::vector<SearchRecord> tp_family_members(const TpFamily& family);

struct RatioExperiment {
  Int p = 0;
  Int t_max = 0;
  /// Smallest-ratio flat record of S(p, tp+1) for each t <= t_max with tp+1 prime.
  std::vector<SearchRecord> per_t_best;
  std::optional<SearchRecord> best;
  bool below_five_over_p = false;  // best ratio < 5/p
};

/// Scans t = 1..t_max. Requires p > 5. `best` is empty when no family was found.
RatioExperiment min_ratio_experiment(Int p, Int t_max);

/// All family triples (odd primes p < q < r, r <= phi(pq), r = alpha p + beta q)
/// with pqr <= max_pqr, ascending by (p, q, r).
std::vector<FamilyTriple> family_triples_up_to(Int max_pqr);

struct PrimeTriple {
  Int p = 0;
  Int q = 0;
  Int r = 0;
};

/// Odd primes p < q < r with r > phi(pq) and pqr <= max_pqr, ascending.
std::vector<PrimeTriple> trivial_triples_up_to(Int max_pqr);

// Export. Header and field names are fixed:
//   p,q,r,alpha,beta,p_prime,q_prime,C_formula,C_oracle,flat,cond_a,cond_b,cond_c,cond_d,ratio_num,ratio_den
enum class ExportFormat { Csv, Json };

inline constexpr const char* kCsvHeader =
    "p,q,r,alpha,beta,p_prime,q_prime,C_formula,C_oracle,flat,cond_a,cond_b,cond_c,cond_d,ratio_num,ratio_den";

/// Records are written sorted by (p, q, r) regardless of input order.
void write_csv(std::vector<SearchRecord> records, std::ostream& os);
void write_json(std::vector<SearchRecord> records, std::ostream& os);
void export_records(const std::vector<SearchRecord>& records, ExportFormat format, std::ostream& os);
/// Writes to a file; I/O failures raise std::runtime_error naming the path.
void export_records(const std::vector<SearchRecord>& records, ExportFormat format, const std::string& path);

std::vector<SearchRecord> records_from_json(const std::string& text);
std::vector<SearchRecord> records_from_csv(const std::string& text);

}  // namespace psiflat

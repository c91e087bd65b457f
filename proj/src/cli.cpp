#include "psiflat/cli.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "psiflat/coefficients.hpp"
#include "psiflat/height.hpp"
#include "psiflat/polynomial.hpp"
#include "psiflat/search.hpp"
#include "psiflat/verify.hpp"

namespace psiflat::cli {

namespace {

struct Options {
  Int p = 0, q = 0, r = 0, m = 0, n = 0, t = 0, limit_t = 0, max_pqr = 0;
  unsigned jobs = 1;
  std::string method = "fast";
  std::string format = "csv";
  std::string out_path;
  bool verify = false;
  bool dense = false;
  bool oracle = false;
  bool flat_only = false;
  bool witnesses = false;
};

EvalMethod parse_method(const std::string& name) {
  static const std::map<std::string, EvalMethod> kMethods = {
      {"fast", EvalMethod::ClosedForm}, {"sum", EvalMethod::Summation}, {"oracle", EvalMethod::Oracle}};
  return kMethods.at(name);
}

int cmd_coeff(const Options& o, std::ostream& out, std::ostream& err) {
  const EvalMethod method = parse_method(o.method);
  std::optional<FamilyTriple> triple;
  try {
    triple = make_family_triple(o.p, o.q, o.r);
  } catch (const TripleError& e) {
    if (e.fault() != TripleFault::ExceedsPhi) throw;
  }

  Int value = 0;
  if (!triple) {
    err << "note: r > phi(pq); using c(ar+b) = a_pq(b) c_pq(a)\n";
    value = c_trivial_case(o.p, o.q, o.r, o.m);
    if (method == EvalMethod::Oracle || o.verify) {
      const Int expected = inverse_cyclotomic(checked_mul(checked_mul(o.p, o.q), o.r))[o.m];
      if (method == EvalMethod::Oracle) value = expected;
      if (expected != value) {
        err << "oracle disagrees: " << expected << '\n';
        out << value << '\n';
        return kVerificationFailed;
      }
    }
    out << value << '\n';
    return kOk;
  }

  value = c_coeff(*triple, o.m, method);
  out << value << '\n';
  if (o.verify && method != EvalMethod::Oracle) {
    const Int expected = c_coeff(*triple, o.m, EvalMethod::Oracle);
    if (expected != value) {
      err << "oracle disagrees: " << expected << '\n';
      return kVerificationFailed;
    }
  }
  return kOk;
}

int cmd_poly(const Options& o, std::ostream& out) {
  IntPolynomial psi;
  if (o.n > 0)
    psi = inverse_cyclotomic(o.n);
  else
    psi = psi_product_form(o.p, o.q, o.r);
  if (o.dense) {
    for (Int c : psi.coefficients()) out << c << '\n';
  } else {
    out << format_sparse(psi) << '\n';
  }
  return kOk;
}

int cmd_height(const Options& o, std::ostream& out, std::ostream& err) {
  const FamilyTriple t = make_family_triple(o.p, o.q, o.r);
  const HeightReport rep = h_witnesses(t, {.verify_witnesses = o.verify, .with_oracle = false});
  out << "C=" << rep.c_formula;
  int code = kOk;
  if (o.verify) {
    const Int oracle = height_of(inverse_cyclotomic(checked_mul(t.pq(), t.r)));
    if (oracle == rep.c_formula) {
      out << " verified";
    } else {
      out << " oracle=" << oracle << " MISMATCH";
      code = kVerificationFailed;
    }
  }
  out << '\n';
  if (o.witnesses) {
    out << "m1=" << rep.m1 << " e(m1)=" << e_closed(t, rep.m1) << " m2=" << rep.m2 << " e(m2)=" << e_closed(t, rep.m2)
        << '\n';
  }
  if (code != kOk) err << "height formula disagrees with the oracle\n";
  return code;
}

int cmd_flat(const Options& o, std::ostream& out) {
  const FlatnessVerdict v = is_flat(make_family_triple(o.p, o.q, o.r));
  out << "flat=" << int(v.flat) << " conditions=" << int(v.cond_a) << ',' << int(v.cond_b) << ',' << int(v.cond_c)
      << ',' << int(v.cond_d) << '\n';
  return kOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto records = o.flat_only ? flat_set(o.p, o.q, o.oracle) : search_records(o.p, o.q, o.oracle);
  const ExportFormat format = o.format == "json" ? ExportFormat::Json : ExportFormat::Csv;
  if (o.out_path.empty())
    export_records(records, format, out);
  else
    export_records(records, format, o.out_path);
  return kOk;
}

int cmd_family(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.t > 0) {
    const TpFamily fam = tp_family(o.p, o.t);
    out << "# p=" << fam.p << " t=" << fam.t << " q=" << fam.q << " progression=" << fam.progression_start << "+"
        << fam.step << "k limit=" << fam.limit << '\n';
    write_csv(tp_family_members(fam), out);
    return kOk;
  }
  if (o.limit_t < 1) {
    err << "family: give -t or --limit-t\n";
    return kUsage;
  }
  if (o.p < 3 || !is_prime(static_cast<std::uint64_t>(o.p))) throw DomainError("p must be an odd prime");

  // Observed #S(p, q) for q = tp + 1 next to the growth p(p-3)/(p-1) * t/log t.
  out << "t,q,S_count,progression_primes,asymptotic\n";
  for (Int t = 1; t <= o.limit_t; ++t) {
    const Int q = checked_add(checked_mul(t, o.p), 1);
    if (!is_prime(static_cast<std::uint64_t>(q))) continue;
    const auto flat = flat_set(o.p, q);
    const auto prog = tp_family_members(tp_family(o.p, t));
    std::ostringstream asym;
    if (t > 1)
      asym << std::fixed << std::setprecision(2)
           << double(o.p * (o.p - 3)) / double(o.p - 1) * double(t) / std::log(double(t));
    out << t << ',' << q << ',' << flat.size() << ',' << prog.size() << ',' << asym.str() << '\n';
  }
  if (o.p <= 5) {
    err << "note: the small-ratio experiment needs p > 5\n";
    return kOk;
  }
  const RatioExperiment exp = min_ratio_experiment(o.p, o.limit_t);
  if (!exp.best) {
    out << "no family found\n";
    return kOk;
  }
  const SearchRecord& b = *exp.best;
  out << "best=(" << b.p << "," << b.q << "," << b.r << ") ratio=" << b.ratio_num << "/" << b.ratio_den
      << " below_5_over_p=" << int(exp.below_five_over_p) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const SweepReport rep = verify_sweep(o.max_pqr, o.jobs);
  for (const Mismatch& mm : rep.mismatches) out << describe(mm) << '\n';
  out << "checked " << rep.family_triples << " family triples and " << rep.trivial_triples
      << " trivial-case triples (" << rep.coefficients << " coefficients): " << (rep.ok() ? "OK" : "FAILED") << '\n';
  return rep.ok() ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coefficients, heights and flatness of inverse ternary cyclotomic polynomials"};
  app.require_subcommand(1);
  Options o;

  auto add_pqr = [&](CLI::App* sub) {
    sub->add_option("-p", o.p, "smallest prime")->required();
    sub->add_option("-q", o.q, "middle prime")->required();
    sub->add_option("-r", o.r, "largest prime")->required();
  };

  auto* coeff = app.add_subcommand("coeff", "coefficient c(m) of Psi_pqr");
  add_pqr(coeff);
  coeff->add_option("-m", o.m, "exponent")->required();
  coeff->add_option("--method", o.method, "fast | sum | oracle")->check(CLI::IsMember({"fast", "sum", "oracle"}));
  coeff->add_flag("--verify", o.verify, "cross-check against the oracle");

  auto* poly = app.add_subcommand("poly", "print Psi_n, or the inclusion-exclusion Psi_{p,q,r}");
  auto* n_opt = poly->add_option("-n", o.n, "index n");
  auto* pp = poly->add_option("-p", o.p);
  auto* pq = poly->add_option("-q", o.q);
  auto* pr = poly->add_option("-r", o.r);
  pp->needs(pq, pr)->excludes(n_opt);
  pq->needs(pp, pr)->excludes(n_opt);
  pr->needs(pp, pq)->excludes(n_opt);
  poly->add_flag("--dense", o.dense, "one coefficient per line");
  poly->callback([&] {
    if (n_opt->count() == 0 && pp->count() == 0) throw CLI::RequiredError("-n or -p/-q/-r");
  });

  auto* height = app.add_subcommand("height", "height C(pqr) by formula");
  add_pqr(height);
  height->add_flag("--verify", o.verify, "check witnesses and compare with the oracle height");
  height->add_flag("--witnesses", o.witnesses, "print the witness exponents m1, m2");

  auto* flat = app.add_subcommand("flat", "flatness verdict with conditions (a)-(d)");
  add_pqr(flat);

  auto* search = app.add_subcommand("search", "all family members r for (p, q)");
  search->add_option("-p", o.p)->required();
  search->add_option("-q", o.q)->required();
  search->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  search->add_option("--out", o.out_path, "output file (default stdout)");
  search->add_flag("--oracle", o.oracle, "fill C_oracle from the polynomial oracle");
  search->add_flag("--flat-only", o.flat_only, "only the flat members S(p, q)");

  auto* family = app.add_subcommand("family", "q = tp + 1 families");
  family->add_option("-p", o.p)->required();
  family->add_option("-t", o.t, "single family: list the progression primes");
  family->add_option("--limit-t", o.limit_t, "scan t <= T: count table and smallest ratio");

  auto* verify = app.add_subcommand("verify", "cross-engine verification sweep");
  verify->add_option("--max-pqr", o.max_pqr)->required();
  verify->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (coeff->parsed()) return cmd_coeff(o, out, err);
    if (poly->parsed()) return cmd_poly(o, out);
    if (height->parsed()) return cmd_height(o, out, err);
    if (flat->parsed()) return cmd_flat(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (family->parsed()) return cmd_family(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const ConsistencyError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}

}  // namespace psiflat::cli

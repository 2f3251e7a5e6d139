#include "qrc/verify/checks.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qrc/counts/counts.hpp"
#include "qrc/counts/degrees.hpp"
#include "qrc/exactcore/numtheory.hpp"
#include "qrc/exactcore/rational.hpp"
#include "qrc/intersect/adjudicate.hpp"
#include "qrc/intersect/golden.hpp"
#include "qrc/intersect/intersections.hpp"
#include "qrc/intersect/ledger.hpp"
#include "qrc/limbcomb/limbcomb.hpp"
#include "qrc/polyengine/cyclotomic.hpp"
#include "qrc/polyengine/edge_engine.hpp"
#include "qrc/polyengine/families.hpp"

namespace qrc {

namespace {

constexpr const char* kToolVersion = "qrcount 1.0.0";
constexpr Variant kPD = Variant::PaperDisplay;
constexpr Variant kMR = Variant::MarkovRecurrence;

// Checks run sequentially: the build targets a single-core host, and the
// report is sorted by id afterwards, so ordering never depends on the
// execution schedule.
class Collector {
 public:
  explicit Collector(std::vector<CheckResult>* out) : out_(out) {}

  // Frozen-value comparison: pass iff the value strings match byte for byte.
  void value(const std::string& id, const std::string& citation, const std::string& expected,
             const std::function<std::string()>& compute) {
    CheckResult r;
    r.id = id;
    r.citation = citation;
    r.expected = expected;
    try {
      r.computed = compute();
    } catch (const std::exception& e) {
      r.computed = std::string("exception: ") + e.what();
    }
    r.status = (r.computed == r.expected) ? CheckStatus::Pass : CheckStatus::Fail;
    out_->push_back(std::move(r));
  }

  // Law over a grid: `body` returns the first violation, or nothing.
  void law(const std::string& id, const std::string& citation, const std::string& statement,
           const std::function<std::optional<std::string>()>& body) {
    CheckResult r;
    r.id = id;
    r.citation = citation;
    r.expected = "holds: " + statement;
    std::optional<std::string> fail;
    try {
      fail = body();
    } catch (const std::exception& e) {
      fail = std::string("exception: ") + e.what();
    }
    if (fail) {
      r.status = CheckStatus::Fail;
      r.computed = "violated: " + *fail;
    } else {
      r.status = CheckStatus::Pass;
      r.computed = r.expected;
    }
    out_->push_back(std::move(r));
  }

  // A stored or displayed claim that exact computation contradicts, with the
  // resolution recorded.  `confirm` re-derives the conflict; if the conflict
  // itself fails to reproduce, the check degrades to a hard failure.
  void adjudicated(const std::string& id, const std::string& citation,
                   const std::string& storedClaim, const std::string& resolution, bool unresolved,
                   const std::function<std::optional<std::string>()>& confirm) {
    std::optional<std::string> fail;
    try {
      fail = confirm();
    } catch (const std::exception& e) {
      fail = std::string("exception: ") + e.what();
    }
    CheckResult r;
    r.id = id;
    r.citation = citation;
    r.expected = storedClaim;
    if (fail) {
      r.status = CheckStatus::Fail;
      r.computed = "violated: " + *fail;
    } else {
      r.status = CheckStatus::Adjudicated;
      r.computed = resolution;
      r.unresolved = unresolved;
    }
    out_->push_back(std::move(r));
  }

  void push(CheckResult r) { out_->push_back(std::move(r)); }

 private:
  std::vector<CheckResult>* out_;
};

std::string at(const std::string& where, const std::string& got, const std::string& want) {
  return where + ": got " + got + ", law gives " + want;
}

// ---------------------------------------------------------------------------
// counts suite: divisor-sum identities, golden tables, counting laws.
// ---------------------------------------------------------------------------

void suiteCounts(Collector& col) {
  col.law("counts.01.totient-divisor-sum", "law:totient-divisor-sum",
          "sum of phi(d) over d | n equals n for 1 <= n <= 10000",
          []() -> std::optional<std::string> {
            for (long n = 1; n <= 10000; ++n) {
              Int s(0);
              for (long d : divisors(n)) s += euler_phi(d);
              if (s != Int(n)) return at("n=" + std::to_string(n), s.toString(), std::to_string(n));
            }
            return std::nullopt;
          });

  col.law("counts.02.moebius-divisor-sum", "law:moebius-divisor-sum",
          "sum of mu(d) over d | n equals [n = 1] for 1 <= n <= 10000",
          []() -> std::optional<std::string> {
            for (long n = 1; n <= 10000; ++n) {
              int s = 0;
              for (long d : divisors(n)) s += moebius_mu(d);
              if (s != (n == 1 ? 1 : 0))
                return at("n=" + std::to_string(n), std::to_string(s), n == 1 ? "1" : "0");
            }
            return std::nullopt;
          });

  col.law("counts.03.rational-field-laws", "law:exact-rational-arithmetic",
          "(x + y) - y = x, (x / y) * y = x, x * y = y * x on 2000 seeded samples",
          []() -> std::optional<std::string> {
            std::mt19937_64 rng(0xC0FFEEu);
            std::uniform_int_distribution<long> num(-1000000, 1000000);
            std::uniform_int_distribution<long> den(1, 1000000);
            for (int i = 0; i < 2000; ++i) {
              Rat x(num(rng), den(rng)), y(num(rng), den(rng));
              if ((x + y) - y != x) return "sample " + std::to_string(i) + ": add/sub roundtrip";
              if (!y.isZero() && (x / y) * y != x)
                return "sample " + std::to_string(i) + ": div/mul roundtrip";
              if (x * y != y * x) return "sample " + std::to_string(i) + ": commutativity";
            }
            return std::nullopt;
          });

  col.law("counts.04.nu2-closed-form", "law:half-limb-closed-form",
          "nu_2(k) = 2^k/6 + (-1)^k/3 for 1 <= k <= 20", []() -> std::optional<std::string> {
            for (long k = 1; k <= 20; ++k) {
              Rat want = Rat(Int::pow2(static_cast<unsigned long>(k)), Int(6)) +
                         Rat(Int::minus1pow(k), Int(3));
              if (Rat(nu(2, k)) != want)
                return at("k=" + std::to_string(k), nu(2, k).toString(), want.toString());
            }
            return std::nullopt;
          });

  for (long m = 2; m <= 8; ++m) {
    col.value("counts.05.golden-one-cycle-exact.m" + std::to_string(m),
              golden::citation_eta_prime_ii(), golden::eta_prime_ii_table(m)->toString(),
              [m] { return eta_prime_ii(m, kPD).toString(); });
  }

  for (long m = 3; m <= 8; ++m)
    for (long j = 1; j < m; ++j) {
      col.value("counts.06.golden-one-cycle-sector.m" + std::to_string(m) + "j" +
                    std::to_string(j),
                golden::citation_eta_ii(), golden::eta_ii_table(m, j)->toString(),
                [m, j] { return eta_ii_mj(m, j, kPD).toString(); });
    }

  // The frozen coefficients govern the exact-period counts: invert the
  // period-dividing coefficients over the divisors of n.  Six of the seven
  // stored entries match that inversion; the n = 6 entry does not, and the
  // computed value wins because only it keeps the remainder
  // eta'_IV(6, m) - c * 2^m inside the proven bound (the stored value makes
  // the remainder diverge like 2^m).  That entry is therefore reported as
  // adjudicated rather than recomputed-and-compared.
  auto exactFirstCoefficient = [](long n) {
    Rat c(0, 1);
    for (long d : divisors(n)) c += Rat(moebius_mu(n / d), 1) * eta_iv_coefficient(d);
    return c;
  };
  for (long n = 1; n <= 7; ++n) {
    if (n == 6) continue;
    col.value("counts.07.golden-growth-coefficient.n" + std::to_string(n),
              golden::citation_eta_iv_coefficients(),
              golden::eta_iv_coefficient_table(n)->toString(),
              [&, n] { return exactFirstCoefficient(n).toString(); });
  }
  col.adjudicated(
      "counts.07.golden-growth-coefficient.n6", golden::citation_eta_iv_coefficients(),
      "stored: 67457/6510",
      "computed: 98699/9765 (divisor inversion of the growth coefficients; certified by the "
      "remainder bound at m = 40, which the stored value violates)",
      /*unresolved=*/false, [&]() -> std::optional<std::string> {
        const Rat stored = *golden::eta_iv_coefficient_table(6);
        if (stored != Rat(67457, 6510))
          return at("stored coefficient", stored.toString(), "67457/6510");
        const Rat combined = exactFirstCoefficient(6);
        if (combined != Rat(98699, 9765))
          return at("divisor inversion", combined.toString(), "98699/9765");
        if (combined == stored) return std::string("no conflict: stored value matches inversion");
        const long m = 40;
        const Rat p2(Int::pow2(static_cast<unsigned long>(m)));
        // Divisor inversion turns per-divisor remainder bounds into a sum.
        Int boundSum(0);
        for (long d : divisors(6)) boundSum += epsilon_bound(d, m);
        const Rat bound(boundSum);
        const Rat exact(eta_iv_exact_first(6, m));
        if (!((exact - combined * p2).abs() <= bound))
          return std::string("computed coefficient fails the remainder bound at m = 40");
        if ((exact - stored * p2).abs() <= bound)
          return std::string("stored coefficient unexpectedly satisfies the remainder bound");
        return std::nullopt;
      });

  col.law("counts.08.one-cycle-sector-symmetry", "law:sector-symmetry",
          "eta_II(m, j) = eta_II(m, m - j) for 3 <= m <= 16, both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long m = 3; m <= 16; ++m)
                for (long j = 1; j < m; ++j)
                  if (eta_ii_mj(m, j, v) != eta_ii_mj(m, m - j, v))
                    return at("(" + std::to_string(m) + "," + std::to_string(j) + ")," +
                                  variant_name(v),
                              eta_ii_mj(m, j, v).toString(), eta_ii_mj(m, m - j, v).toString());
            return std::nullopt;
          });

  col.law("counts.09.one-cycle-row-sum", "law:sector-row-sum",
          "sum_j eta_II(m, j) equals the weighted closed form for 3 <= m <= 16, both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long m = 3; m <= 16; ++m) {
                Int s(0);
                for (long j = 1; j < m; ++j) s += eta_ii_mj(m, j, v);
                if (s != eta_ii_weighted(m, v))
                  return at("m=" + std::to_string(m) + "," + variant_name(v), s.toString(),
                            eta_ii_weighted(m, v).toString());
              }
            return std::nullopt;
          });

  col.law("counts.10.one-cycle-weighted-divisor-form", "law:sector-divisor-sum",
          "sum_j eta_II(m, j) = sum over d | m, d >= 3 of (m/d) eta'_II(d) for 3 <= m <= 12, "
          "both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long m = 3; m <= 12; ++m) {
                Int lhs(0);
                for (long j = 1; j < m; ++j) lhs += eta_ii_mj(m, j, v);
                Int rhs(0);
                for (long d : divisors(m))
                  if (d >= 3) rhs += Int(m / d) * eta_prime_ii(d, v);
                if (lhs != rhs)
                  return at("m=" + std::to_string(m) + "," + variant_name(v), lhs.toString(),
                            rhs.toString());
              }
            return std::nullopt;
          });

  col.law("counts.11.one-cycle-moebius-roundtrip", "law:moebius-inversion",
          "sum over d | m of mu(m/d) eta_II(d) = eta'_II(m) for 2 <= m <= 16, both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long m = 2; m <= 16; ++m) {
                Int inv(0);
                for (long d : divisors(m)) inv += Int(moebius_mu(m / d)) * eta_ii(d, v);
                if (inv != eta_prime_ii(m, v))
                  return at("m=" + std::to_string(m) + "," + variant_name(v), inv.toString(),
                            eta_prime_ii(m, v).toString());
              }
            return std::nullopt;
          });

  col.law("counts.12.two-cycle-symmetry", "law:two-cycle-symmetry",
          "eta_IV(n, m) = eta_IV(m, n) for 1 <= n, m <= 12, both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long n = 1; n <= 12; ++n)
                for (long m = 1; m <= 12; ++m)
                  if (eta_iv(n, m, v) != eta_iv(m, n, v))
                    return at("(" + std::to_string(n) + "," + std::to_string(m) + ")," +
                                  variant_name(v),
                              eta_iv(n, m, v).toString(), eta_iv(m, n, v).toString());
            return std::nullopt;
          });

  col.law("counts.13.two-cycle-period1-row", "law:period1-row",
          "eta_IV(1, m) = 2^(m-1) for 1 <= m <= 14 along both arrangements",
          []() -> std::optional<std::string> {
            for (long m = 1; m <= 14; ++m) {
              const Int want = Int::pow2(static_cast<unsigned long>(m - 1));
              if (eta_iv(1, m) != want)
                return at("m=" + std::to_string(m), eta_iv(1, m).toString(), want.toString());
              if (eta_iv_from_degree_product(1, m) != want)
                return at("m=" + std::to_string(m) + " (degree-product route)",
                          eta_iv_from_degree_product(1, m).toString(), want.toString());
            }
            return std::nullopt;
          });

  col.law("counts.14.two-cycle-period2-increment", "law:period2-increment",
          "eta_IV(2, m) - eta_IV(1, m) = (2^m - (-1)^m)/3 for 1 <= m <= 14 along both "
          "arrangements",
          []() -> std::optional<std::string> {
            for (long m = 1; m <= 14; ++m) {
              const Int want = divExact(
                  Int::pow2(static_cast<unsigned long>(m)) - Int::minus1pow(m), Int(3));
              const Int got = eta_iv(2, m) - eta_iv(1, m);
              if (got != want)
                return at("m=" + std::to_string(m), got.toString(), want.toString());
              const Int got2 =
                  eta_iv_from_degree_product(2, m) - eta_iv_from_degree_product(1, m);
              if (got2 != want)
                return at("m=" + std::to_string(m) + " (degree-product route)", got2.toString(),
                          want.toString());
            }
            return std::nullopt;
          });

  col.law("counts.15.two-cycle-rewrite-equivalence", "law:arrangement-equivalence",
          "eta_IV equals its degree-product rearrangement for 1 <= n <= m <= 12, both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long n = 1; n <= 12; ++n)
                for (long m = n; m <= 12; ++m)
                  if (eta_iv(n, m, v) != eta_iv_from_degree_product(n, m, v))
                    return at("(" + std::to_string(n) + "," + std::to_string(m) + ")," +
                                  variant_name(v),
                              eta_iv(n, m, v).toString(),
                              eta_iv_from_degree_product(n, m, v).toString());
            return std::nullopt;
          });

  col.law("counts.16.two-cycle-remainder-bound", "law:growth-remainder-bound",
          "|eta_IV(n, m) - C_n 2^m| <= 2^n + 2^(2 gcd(n, m)) for 1 <= n <= 6, n <= m <= 14, "
          "both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long n = 1; n <= 6; ++n)
                for (long m = n; m <= 14; ++m) {
                  const Rat e = epsilon(n, m, v);
                  if (!(e.abs() <= Rat(epsilon_bound(n, m))))
                    return at("(" + std::to_string(n) + "," + std::to_string(m) + ")," +
                                  variant_name(v),
                              e.toString(), "<= " + epsilon_bound(n, m).toString());
                }
            return std::nullopt;
          });

  col.law("counts.17.variant-containment", "law:variant-containment",
          "the variants agree whenever gcd(n, m) <= 5 (n <= m <= 12) and differ by 1 at (6, 6)",
          []() -> std::optional<std::string> {
            for (long n = 1; n <= 12; ++n)
              for (long m = n; m <= 12; ++m)
                if (std::gcd(n, m) <= 5 && eta_iv(n, m, kPD) != eta_iv(n, m, kMR))
                  return at("(" + std::to_string(n) + "," + std::to_string(m) + ")",
                            eta_iv(n, m, kMR).toString(), eta_iv(n, m, kPD).toString());
            const Int diff = eta_iv(6, 6, kMR) - eta_iv(6, 6, kPD);
            if (diff != Int(1)) return at("(6,6) variant gap", diff.toString(), "1");
            return std::nullopt;
          });

  col.law("counts.18.residual-recombination", "law:residual-recombination",
          "curve_pair_residual(n, m) recombines eta_IV, the shared one-cycle block, and the "
          "parity block for 1 <= n <= m <= 12, both variants",
          []() -> std::optional<std::string> {
            for (Variant v : {kPD, kMR})
              for (long n = 1; n <= 12; ++n)
                for (long m = n; m <= 12; ++m) {
                  Int parity;
                  if (n % 2 == 1)
                    parity = eta_iv(1, m, v);
                  else if (m % 2 == 1)
                    parity = eta_iv(2, m, v);
                  else
                    parity = eta_iv(2, m, v) + eta_ii(2, v);
                  const Int want = eta_iv(n, m, v) + eta_ii(std::gcd(n, m), v) - parity;
                  if (curve_pair_residual(n, m) != want)
                    return at("(" + std::to_string(n) + "," + std::to_string(m) + ")," +
                                  variant_name(v),
                              curve_pair_residual(n, m).toString(), want.toString());
                }
            return std::nullopt;
          });

  const long frozen[9][3] = {{3, 3, 9},  {3, 4, 18},  {3, 5, 36},  {3, 6, 70}, {3, 7, 141},
                             {4, 4, 36}, {4, 5, 73},  {4, 6, 143}, {5, 5, 183}};
  for (const auto& row : frozen) {
    const long n = row[0], m = row[1], want = row[2];
    col.value("counts.19.two-cycle-residual.n" + std::to_string(n) + "m" + std::to_string(m),
              "frozen:two-cycle-residual-oracle", std::to_string(want),
              [n, m] { return curve_pair_residual(n, m).toString(); });
  }
}

// ---------------------------------------------------------------------------
// limbs suite: lattice interval counts, transfer recurrence, sector sums.
// ---------------------------------------------------------------------------

void suiteLimbs(Collector& col) {
  col.law("limbs.01.interval-count-closed-form", "law:interval-count-equivalence",
          "lattice interval count equals the nu closed form for 2 <= q <= 8, q <= m <= 16",
          []() -> std::optional<std::string> {
            for (long q = 2; q <= 8; ++q)
              for (long m = q; m <= 16; ++m)
                if (interval_count(q, m).nu != nu(q, m))
                  return at("(q=" + std::to_string(q) + ",m=" + std::to_string(m) + ")",
                            interval_count(q, m).nu.toString(), nu(q, m).toString());
            return std::nullopt;
          });

  col.law("limbs.02.markov-closed-form", "law:recurrence-equivalence",
          "transfer recurrence equals the recurrence-convention nu' closed form for "
          "2 <= q <= 8, 1 <= j <= 24",
          []() -> std::optional<std::string> {
            for (long q = 2; q <= 8; ++q)
              for (long j = 1; j <= 24; ++j)
                if (markov_nu_prime(q, j) != nu_prime(q, j, kMR))
                  return at("(q=" + std::to_string(q) + ",j=" + std::to_string(j) + ")",
                            markov_nu_prime(q, j).toString(), nu_prime(q, j, kMR).toString());
            return std::nullopt;
          });

  col.law("limbs.03.variant-difference-set", "law:variant-difference-set",
          "the nu' conventions differ exactly at j = q (values 0 and 1) over 2 <= q <= 8, "
          "1 <= j <= 24",
          []() -> std::optional<std::string> {
            for (long q = 2; q <= 8; ++q)
              for (long j = 1; j <= 24; ++j) {
                const Int pd = nu_prime(q, j, kPD), mr = nu_prime(q, j, kMR);
                const bool differ = pd != mr;
                if (differ != (j == q))
                  return "(q=" + std::to_string(q) + ",j=" + std::to_string(j) +
                         "): conventions " + (differ ? "differ" : "agree") + " (" +
                         pd.toString() + " vs " + mr.toString() + ")";
                if (j == q && (pd != Int(0) || mr != Int(1)))
                  return at("(q=" + std::to_string(q) + ",j=q)",
                            pd.toString() + "/" + mr.toString(), "0/1");
              }
            return std::nullopt;
          });

  col.law("limbs.04.state-mass-invariant", "law:state-mass",
          "the transfer state mass is 2^n at every step for q <= 8, n <= 24",
          []() -> std::optional<std::string> {
            for (long q = 2; q <= 8; ++q) {
              MarkovState st(q);
              for (long n = 0; n <= 24; ++n) {
                if (st.mass() != Int::pow2(static_cast<unsigned long>(n)))
                  return at("(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")",
                            st.mass().toString(),
                            Int::pow2(static_cast<unsigned long>(n)).toString());
                st.step();
              }
            }
            return std::nullopt;
          });

  col.law("limbs.05.weighted-sum-collapse", "law:weighted-sum-collapse",
          "s_sum(j) = 2^(j-1) - 1 for 2 <= j <= 20", []() -> std::optional<std::string> {
            for (long j = 2; j <= 20; ++j) {
              const Int want = Int::pow2(static_cast<unsigned long>(j - 1)) - Int(1);
              if (s_sum(j) != want)
                return at("j=" + std::to_string(j), s_sum(j).toString(), want.toString());
            }
            return std::nullopt;
          });

  col.law("limbs.06.sector-sum-corrected", "law:sector-sum-corrected",
          "sum over 3 <= q <= j of phi(q) nu'_q(j) (recurrence convention) equals "
          "(2^j - (-1)^j)/3 - 1 for 3 <= j <= 20",
          []() -> std::optional<std::string> {
            for (long j = 3; j <= 20; ++j) {
              Int s(0);
              for (long q = 3; q <= j; ++q) s += euler_phi(q) * markov_nu_prime(q, j);
              const Int want =
                  divExact(Int::pow2(static_cast<unsigned long>(j)) - Int::minus1pow(j), Int(3)) -
                  Int(1);
              if (s != want)
                return at("j=" + std::to_string(j), s.toString(), want.toString());
            }
            return std::nullopt;
          });

  col.adjudicated(
      "limbs.07.sector-sum-displayed-sign", "tabulated:sector-sum-sign",
      "displayed claim: 3 (sum + 1) = 2^j + (-1)^j for the odd-denominator sector sum",
      "corrected sign: 3 (sum + 1) = 2^j - (-1)^j; the displayed sign fails at every j in "
      "[3, 20] (the displayed value is not even integral at odd j)",
      /*unresolved=*/false, []() -> std::optional<std::string> {
        for (long j = 3; j <= 20; ++j) {
          Int s(0);
          for (long q = 3; q <= j; ++q) s += euler_phi(q) * markov_nu_prime(q, j);
          const Int corrected =
              Int::pow2(static_cast<unsigned long>(j)) - Int::minus1pow(j);
          const Int displayed = Int::pow2(static_cast<unsigned long>(j)) + Int::minus1pow(j);
          const Int lhs = Int(3) * (s + Int(1));
          if (lhs != corrected)
            return at("j=" + std::to_string(j) + " corrected form", lhs.toString(),
                      corrected.toString());
          if (lhs == displayed)
            return "j=" + std::to_string(j) + ": the displayed sign unexpectedly holds";
        }
        return std::nullopt;
      });

  col.law("limbs.08.q2-closed-form", "law:half-limb-recurrence",
          "nu'_2(j) = (2^(j-1) - (-1)^(j-1))/3 for 1 <= j <= 24",
          []() -> std::optional<std::string> {
            for (long j = 1; j <= 24; ++j) {
              const Int want = divExact(
                  Int::pow2(static_cast<unsigned long>(j - 1)) - Int::minus1pow(j - 1), Int(3));
              if (markov_nu_prime(2, j) != want)
                return at("j=" + std::to_string(j), markov_nu_prime(2, j).toString(),
                          want.toString());
            }
            return std::nullopt;
          });

  col.law("limbs.09.t-count-telescoping", "law:t-count-telescoping",
          "t_count(0) = 0 and t_count(j) - t_count(j-1) = s_sum(j) for 2 <= j <= 20",
          []() -> std::optional<std::string> {
            if (t_count(0) != Int(0)) return at("j=0", t_count(0).toString(), "0");
            for (long j = 2; j <= 20; ++j)
              if (t_count(j) - t_count(j - 1) != s_sum(j))
                return at("j=" + std::to_string(j), (t_count(j) - t_count(j - 1)).toString(),
                          s_sum(j).toString());
            return std::nullopt;
          });
}

// ---------------------------------------------------------------------------
// polys suite: family degrees, line restrictions, factor profiles.
// ---------------------------------------------------------------------------

void suitePolys(Collector& col) {
  col.law("polys.01.structural-facts-materialized", "law:structural-facts",
          "certified structural facts match the materialized families (orbit pair n <= 8, "
          "two-cycle pair k <= 7, critical-orbit pair m <= 8)",
          []() -> std::optional<std::string> {
            for (long n = 2; n <= 8; ++n) {
              const PqFacts f = pq_facts(n);
              const SparsePoly p = family_poly(FamilyId::P, n);
              const SparsePoly q = family_poly(FamilyId::Q, n);
              if (f.degP != p.totalDegree() || f.degQ != q.totalDegree())
                return "orbit pair degree mismatch at n=" + std::to_string(n);
              if (f.degCP != p.degreeIn(Var::c) || f.degDP != p.degreeIn(Var::d) ||
                  f.degCQ != q.degreeIn(Var::c) || f.degDQ != q.degreeIn(Var::d))
                return "orbit pair per-variable degree mismatch at n=" + std::to_string(n);
              if (f.constP != p.constantTerm() || f.constQ != q.constantTerm())
                return "orbit pair constant-term mismatch at n=" + std::to_string(n);
              if (f.dSliceDegP != p.substituteZero(Var::d).totalDegree() ||
                  f.cSliceDegP != p.substituteZero(Var::c).totalDegree())
                return "orbit pair slice-degree mismatch at n=" + std::to_string(n);
              if (f.coeffsPositive != p.allCoeffsPositive() || !q.allCoeffsPositive())
                return "orbit pair positivity mismatch at n=" + std::to_string(n);
            }
            for (long k = 1; k <= 7; ++k) {
              const RsFacts f = rs_facts(k);
              const SparsePoly r = family_poly(FamilyId::R, k);
              const SparsePoly s = family_poly(FamilyId::S, k);
              if (f.degR != r.totalDegree() || f.degS != s.totalDegree())
                return "two-cycle pair degree mismatch at k=" + std::to_string(k);
              if (f.minDegR != r.minTotalDegree() || f.minDegS != s.minTotalDegree())
                return "two-cycle pair min-degree mismatch at k=" + std::to_string(k);
              if (f.degG != family_poly(FamilyId::G, k).totalDegree())
                return "pencil-member degree mismatch at k=" + std::to_string(k);
            }
            for (long m = 1; m <= 8; ++m) {
              const TuFacts f = tu_facts(m);
              if (f.degT != family_poly(FamilyId::T, m).totalDegree() ||
                  f.degU != family_poly(FamilyId::U, m).totalDegree())
                return "critical-orbit pair degree mismatch at m=" + std::to_string(m);
            }
            return std::nullopt;
          });

  col.law("polys.02.orbit-degree-closed-form", "law:orbit-degree",
          "deg P_n = (2^n - 3 - (-1)^n)/6 with constant term 1, full-degree c and d "
          "monomials, and positive coefficients for 3 <= n <= 12",
          []() -> std::optional<std::string> {
            for (long n = 3; n <= 12; ++n) {
              const PqFacts f = pq_facts(n);
              if (Int(f.degP) != family_p_degree(n))
                return at("n=" + std::to_string(n), std::to_string(f.degP),
                          family_p_degree(n).toString());
              if (f.constP != Int(1))
                return at("n=" + std::to_string(n) + " constant term", f.constP.toString(), "1");
              if (f.dSliceDegP != f.degP || f.cSliceDegP != f.degP || f.degCP != f.degP ||
                  f.degDP != f.degP)
                return "n=" + std::to_string(n) + ": a slice or per-variable degree drops";
              if (!f.coeffsPositive) return "n=" + std::to_string(n) + ": coefficient not positive";
            }
            return std::nullopt;
          });

  col.law("polys.03.two-cycle-curve-degrees", "law:two-cycle-degrees",
          "deg R_k = (7 2^k - (-1)^k - 3)/6, min degree 2^(k-1) realized by a single pure-d "
          "monomial, deg G_k = (7 2^k + 3 - (-1)^k)/6 for k <= 12",
          []() -> std::optional<std::string> {
            for (long k = 1; k <= 12; ++k) {
              const RsFacts f = rs_facts(k);
              if (Int(f.degR) != family_r_degree(k))
                return at("k=" + std::to_string(k), std::to_string(f.degR),
                          family_r_degree(k).toString());
              if (Int(f.minDegR) != family_r_min_degree(k))
                return at("k=" + std::to_string(k) + " min degree", std::to_string(f.minDegR),
                          family_r_min_degree(k).toString());
              if (!f.minFormRSingleDMonomial)
                return "k=" + std::to_string(k) + ": minimal form is not a single d-monomial";
              if (Int(f.degG) != family_g_degree(k))
                return at("k=" + std::to_string(k) + " pencil member", std::to_string(f.degG),
                          family_g_degree(k).toString());
            }
            return std::nullopt;
          });

  col.law("polys.04.c0-slice-degree", "law:c0-slice-degree",
          "deg R1_k = (5 2^k - 3 + (-1)^k)/6 for k <= 12", []() -> std::optional<std::string> {
            for (long k = 1; k <= 12; ++k) {
              const UniPoly r1 = family_poly(FamilyId::R1, k).toUni(Var::d);
              if (Int(r1.degree()) != family_r1_degree(k))
                return at("k=" + std::to_string(k), std::to_string(r1.degree()),
                          family_r1_degree(k).toString());
            }
            return std::nullopt;
          });

  col.law("polys.05.combined-curve-degree", "law:combined-curve-degree",
          "deg (c P_j + 2 d Q_j) = (2^j - (-1)^j + 3)/6 for j <= 8",
          []() -> std::optional<std::string> {
            for (long j = 1; j <= 8; ++j) {
              const SparsePoly cp = family_poly(FamilyId::CPplus2dQ, j);
              if (Int(cp.totalDegree()) != family_cp2dq_degree(j))
                return at("j=" + std::to_string(j), std::to_string(cp.totalDegree()),
                          family_cp2dq_degree(j).toString());
            }
            return std::nullopt;
          });

  col.law("polys.06.critical-orbit-degree", "law:critical-orbit-degree",
          "deg T_m = deg U_m = 2^m - 1 for m <= 12", []() -> std::optional<std::string> {
            for (long m = 1; m <= 12; ++m) {
              const TuFacts f = tu_facts(m);
              const Int want = Int::pow2(static_cast<unsigned long>(m)) - Int(1);
              if (Int(f.degT) != want || Int(f.degU) != want)
                return at("m=" + std::to_string(m),
                          std::to_string(f.degT) + "/" + std::to_string(f.degU), want.toString());
            }
            return std::nullopt;
          });

  col.law("polys.07.b0-specialization", "law:b0-specialization",
          "the b = 0 specialization of the critical-orbit pair reproduces (T0_m, U0_m) for "
          "m <= 12",
          []() -> std::optional<std::string> {
            for (long m = 1; m <= 12; ++m) {
              auto [tb, ub] = t0_u0_from_b0(m);
              if (tb != family_poly(FamilyId::T0, m).toUni(Var::a))
                return "m=" + std::to_string(m) + ": first member differs";
              if (ub != family_poly(FamilyId::U0, m).toUni(Var::a))
                return "m=" + std::to_string(m) + ": second member differs";
            }
            return std::nullopt;
          });

  col.law("polys.08.reflection-identity", "law:reflection-identity",
          "Tt_m(x) = (-1)^m T0_m(-x) and Ut_m(x) = -U0_m(-x) at all materialized levels",
          []() -> std::optional<std::string> {
            for (long m = 1; m <= tilde_materialization_cap(); ++m) {
              auto [tt, tu] = tilde_polys(m);
              const UniPoly t0 = family_poly(FamilyId::T0, m).toUni(Var::a);
              const UniPoly u0 = family_poly(FamilyId::U0, m).toUni(Var::a);
              const UniPoly tRef = (m % 2 == 0) ? t0.reflected() : -(t0.reflected());
              if (tt != tRef) return "m=" + std::to_string(m) + ": first reflection differs";
              if (tu != -(u0.reflected()))
                return "m=" + std::to_string(m) + ": second reflection differs";
            }
            return std::nullopt;
          });

  col.law("polys.09.reduced-orbit-degrees", "law:reduced-orbit-degrees",
          "deg U0_{2k} = (2^{2k} - 1)/3, deg T0_{2k+1} = (2^{2k+1} + 1)/3, and "
          "deg(T0_m + U0_m) = (2^m - (-1)^m)/3 with distinct member degrees for m <= 16",
          []() -> std::optional<std::string> {
            for (long m = 1; m <= 16; ++m) {
              const TildeFacts f = tilde_facts(m);
              if (m % 2 == 0 && Int(f.degU0) != family_u0_even_degree(m / 2))
                return at("m=" + std::to_string(m), std::to_string(f.degU0),
                          family_u0_even_degree(m / 2).toString());
              if (m % 2 == 1 && Int(f.degT0) != family_t0_odd_degree((m - 1) / 2))
                return at("m=" + std::to_string(m), std::to_string(f.degT0),
                          family_t0_odd_degree((m - 1) / 2).toString());
              if (Int(f.degSum) != family_t0u0_sum_degree(m))
                return at("m=" + std::to_string(m) + " sum degree", std::to_string(f.degSum),
                          family_t0u0_sum_degree(m).toString());
              if (f.degT0 == f.degU0) return "m=" + std::to_string(m) + ": member degrees tie";
            }
            return std::nullopt;
          });

  col.law("polys.10.reflected-positivity", "law:reflected-positivity",
          "the sign-normalized reflected pair has positive coefficients for m <= 16",
          []() -> std::optional<std::string> {
            for (long m = 1; m <= 16; ++m)
              if (!tilde_facts(m).tildeAllPositive)
                return "m=" + std::to_string(m) + ": reflected positivity fails";
            return std::nullopt;
          });

  col.adjudicated(
      "polys.11.displayed-positivity", "tabulated:critical-orbit-positivity",
      "displayed claim: the displayed-sign pair (T0_m, U0_m) has positive coefficients",
      "the displayed-sign pair carries negative coefficients at every materialized level "
      "(first members: T0_3 and U0_2); positivity holds for the sign-normalized reflected pair",
      /*unresolved=*/false, []() -> std::optional<std::string> {
        for (long m = 1; m <= 16; ++m) {
          const TildeFacts f = tilde_facts(m);
          if (f.literalAllPositive.has_value() && *f.literalAllPositive)
            return "m=" + std::to_string(m) + ": the displayed-sign claim unexpectedly holds";
        }
        if (family_poly(FamilyId::T0, 3).allCoeffsPositive())
          return "T0_3 unexpectedly has positive coefficients";
        if (family_poly(FamilyId::U0, 2).allCoeffsPositive())
          return "U0_2 unexpectedly has positive coefficients";
        return std::nullopt;
      });

  col.law("polys.12.line-order-two-sides", "law:line-order-agreement",
          "the d = 0 vanishing orders of the two one-cycle curves agree at every boundary "
          "parameter for 3 <= q <= j <= 8",
          []() -> std::optional<std::string> {
            for (long j = 3; j <= 8; ++j) {
              const SparsePoly pSide = family_poly(FamilyId::CPplus2dQ, j);
              const SparsePoly qSide = family_poly(FamilyId::R, j);
              for (long q = 3; q <= j; ++q) {
                const long mp = restrict_and_order(pSide, RestrictLine::DZero, CpqRef{q});
                const long mq = restrict_and_order(qSide, RestrictLine::DZero, CpqRef{q});
                if (mp != mq)
                  return at("(q=" + std::to_string(q) + ",j=" + std::to_string(j) + ")",
                            std::to_string(mp) + "/" + std::to_string(mq), "equal orders");
              }
            }
            return std::nullopt;
          });

  col.law("polys.13.line-order-recurrence-convention", "law:line-order-value",
          "the d = 0 vanishing order equals the recurrence-convention nu'_q(j) for "
          "3 <= q <= j <= 8",
          []() -> std::optional<std::string> {
            for (long j = 3; j <= 8; ++j) {
              const SparsePoly pSide = family_poly(FamilyId::CPplus2dQ, j);
              for (long q = 3; q <= j; ++q) {
                const long mp = restrict_and_order(pSide, RestrictLine::DZero, CpqRef{q});
                if (Int(mp) != nu_prime(q, j, kMR))
                  return at("(q=" + std::to_string(q) + ",j=" + std::to_string(j) + ")",
                            std::to_string(mp), nu_prime(q, j, kMR).toString());
              }
            }
            return std::nullopt;
          });

  col.adjudicated(
      "polys.14.tabulation-convention", "tabulated:limb-count-convention",
      "tabulated convention: nu'_q(q) = 0 (the tabulated closed form drops the q = j cell)",
      "the exact line multiplicity at q = j is 1 for every 3 <= q <= j <= 8: the recurrence "
      "convention nu'_q(q) = 1 is the algebraic value",
      /*unresolved=*/false, []() -> std::optional<std::string> {
        for (long j = 3; j <= 8; ++j) {
          const long mp = restrict_and_order(family_poly(FamilyId::CPplus2dQ, j),
                                             RestrictLine::DZero, CpqRef{j});
          if (mp != 1)
            return at("q=j=" + std::to_string(j), std::to_string(mp), "1");
          if (nu_prime(j, j, kPD) != Int(0))
            return "q=j=" + std::to_string(j) + ": tabulated convention is not 0 there";
        }
        return std::nullopt;
      });

  col.law("polys.15.x-side-factor-profile", "law:x-side-profile",
          "the d = 0 factor profile of P_n has unit +-1, no c-power, exponent nu_q(n) at "
          "every boundary parameter, and weighted degree sum deg P_n for 3 <= n <= 10",
          []() -> std::optional<std::string> {
            for (long n = 3; n <= 10; ++n) {
              const FactorProfile prof = factor_profile_on_line(family_poly(FamilyId::P, n));
              if (prof.cPower != 0)
                return "n=" + std::to_string(n) + ": unexpected c-power " +
                       std::to_string(prof.cPower);
              if (prof.unit.abs() != Int(1))
                return "n=" + std::to_string(n) + ": unit " + prof.unit.toString();
              Int acct(0);
              for (const auto& [q, e] : prof.exponents) {
                if (q < 3 || q > n)
                  return "n=" + std::to_string(n) + ": out-of-range factor q=" +
                         std::to_string(q);
                acct += euler_phi(q) * Int(e);
              }
              for (long q = 3; q <= n; ++q) {
                const long e = prof.exponents.count(q) ? prof.exponents.at(q) : 0;
                if (Int(e) != nu(q, n))
                  return at("(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")",
                            std::to_string(e), nu(q, n).toString());
              }
              if (divExact(acct, Int(2)) != family_p_degree(n))
                return at("n=" + std::to_string(n) + " weighted sum",
                          divExact(acct, Int(2)).toString(), family_p_degree(n).toString());
            }
            return std::nullopt;
          });

  col.law("polys.16.gleason-orbit-split", "law:gleason-orbit-split",
          "GleasonOrbit(j) has degree 2^(j+1), order j + 2 at c = 0, and cofactor degree "
          "2^j - 1 + t_count(j) for j <= 10",
          []() -> std::optional<std::string> {
            for (long j = 0; j <= 10; ++j) {
              const UniPoly g = family_poly(FamilyId::GleasonOrbit, j).toUni(Var::c);
              if (Int(g.degree()) != Int::pow2(static_cast<unsigned long>(j + 1)))
                return at("j=" + std::to_string(j) + " degree", std::to_string(g.degree()),
                          Int::pow2(static_cast<unsigned long>(j + 1)).toString());
              if (g.order() != j + 2)
                return at("j=" + std::to_string(j) + " order", std::to_string(g.order()),
                          std::to_string(j + 2));
              const UniPoly cof = g.shiftedDown(static_cast<size_t>(j + 2));
              const Int want =
                  Int::pow2(static_cast<unsigned long>(j)) - Int(1) + t_count(j);
              if (Int(cof.degree()) != want)
                return at("j=" + std::to_string(j) + " cofactor degree",
                          std::to_string(cof.degree()), want.toString());
            }
            return std::nullopt;
          });
}

// ---------------------------------------------------------------------------
// intersections suite: ledgers, certified affine counts, case adjudication.
// ---------------------------------------------------------------------------

Int caseProduct(const CaseId& id) {
  if (id.kind == CaseId::Kind::IV) return family_p_degree(id.a) * family_g_degree(id.b);
  return family_cp2dq_degree(id.b) * family_r_degree(id.a - id.b);
}

std::string caseSlug(const CaseId& id) {
  return std::string(id.kind == CaseId::Kind::II ? "ii-" : "iv-") + std::to_string(id.a) + "-" +
         std::to_string(id.b);
}

void suiteIntersections(Collector& col, const VerifyConfig& cfg) {
  col.law("intersections.01.ledger-accounting", "law:boundary-accounting",
          "every catalogued case's boundary items sum to at most the degree product, with a "
          "nonnegative residual, for both conventions and both multiplicity sources",
          []() -> std::optional<std::string> {
            for (const CaseId& id : all_table_cases())
              for (Variant v : {kPD, kMR})
                for (MultiplicitySource s :
                     {MultiplicitySource::ClosedForm, MultiplicitySource::ExactLocal}) {
                  const BezoutLedger led = bezout_ledger(id, v, s);
                  Int itemSum(0);
                  for (const BoundaryItem& it : led.items) itemSum += it.multiplicity;
                  if (led.residual.sign() < 0 || itemSum + led.residual != led.product)
                    return case_name(id) + " (" + variant_name(v) + "," + source_name(s) +
                           "): items " + itemSum.toString() + " + residual " +
                           led.residual.toString() + " != product " + led.product.toString();
                }
            return std::nullopt;
          });

  col.law("intersections.02.pencil-closed-form", "oracle:certified-affine-count",
          "the orbit curve meets the first pencil member in 2^(n-1) - 1 - (1 + (-1)^n)/2 "
          "affine points off d = 0 for 3 <= n <= 8",
          [&cfg]() -> std::optional<std::string> {
            for (long n = 3; n <= 8; ++n) {
              const long want = (1L << (n - 1)) - 1 - ((n % 2 == 0) ? 1 : 0);
              const auto r = affine_intersections(family_poly(FamilyId::P, n),
                                                  family_poly(FamilyId::G, 1), true,
                                                  cfg.precisionBits);
              if (r.count != want)
                return at("n=" + std::to_string(n), std::to_string(r.count),
                          std::to_string(want));
            }
            return std::nullopt;
          });

  col.law("intersections.03.cubic-line-accounting", "oracle:certified-affine-count",
          "the combined curve meets the degree-3 parameter curve at r = 1/2 in 2^(j-1) "
          "affine points off d = 0, and count + 1 + [j odd] = 3 deg, for 3 <= j <= 6",
          [&cfg]() -> std::optional<std::string> {
            for (long j = 3; j <= 6; ++j) {
              const auto r = affine_intersections(family_poly(FamilyId::CPplus2dQ, j),
                                                  lr_cubic(Rat(1, 2)), true, cfg.precisionBits);
              if (r.count != (1L << (j - 1)))
                return at("j=" + std::to_string(j), std::to_string(r.count),
                          std::to_string(1L << (j - 1)));
              const Int lhs = Int(r.count) + Int(1) + Int((j % 2 == 1) ? 1 : 0);
              if (lhs != Int(3) * family_cp2dq_degree(j))
                return at("j=" + std::to_string(j) + " accounting", lhs.toString(),
                          (Int(3) * family_cp2dq_degree(j)).toString());
            }
            return std::nullopt;
          });

  for (const CaseId& id : all_table_cases()) {
    if (caseProduct(id) > Int(cfg.productBudget)) continue;
    const std::string checkId = "intersections.04.case." + caseSlug(id);
    AdjudicationRecord rec;
    std::string error;
    try {
      rec = adjudicate(id, cfg.precisionBits, cfg.productBudget);
    } catch (const AdjudicationError& e) {
      rec = e.record;
      error = e.what();
    } catch (const std::exception& e) {
      error = e.what();
    }

    CheckResult r;
    r.id = checkId;
    const bool iv = id.kind == CaseId::Kind::IV;
    r.citation = iv ? "law:curve-degree-product-residual" : golden::citation_eta_ii();
    if (!error.empty() || !rec.oracle) {
      r.status = CheckStatus::Fail;
      r.expected = iv ? rec.closedFormPaper.toString()
                      : (rec.paper ? rec.paper->toString() : "missing table value");
      r.computed = "exception: " + (error.empty() ? std::string("oracle unavailable") : error);
      col.push(std::move(r));
      continue;
    }
    switch (rec.verdict) {
      case Verdict::AllAgree:
        r.status = CheckStatus::Pass;
        r.expected = iv ? rec.closedFormPaper.toString() : rec.paper->toString();
        r.computed = rec.oracle->toString();
        break;
      case Verdict::VariantResolved: {
        r.status = CheckStatus::Adjudicated;
        r.unresolved = false;
        const bool markovSide = rec.closedFormMarkov == *rec.oracle &&
                                rec.ledgerClosedFormMarkov == *rec.oracle;
        r.expected =
            "stored: " + (rec.paper ? rec.paper->toString() : rec.closedFormPaper.toString());
        r.computed = "oracle: " + rec.oracle->toString() +
                     "; exact-local ledger: " + rec.ledgerExactLocal.toString() +
                     "; resolved variant: " + (markovSide ? "markov" : "paper");
        break;
      }
      case Verdict::Unresolved:
        r.status = CheckStatus::Adjudicated;
        r.unresolved = true;
        r.expected =
            "stored: " + (rec.paper ? rec.paper->toString() : rec.closedFormPaper.toString());
        r.computed = "oracle: " + rec.oracle->toString() + "; no single route set matches (" +
                     "closed forms " + rec.closedFormPaper.toString() + "/" +
                     rec.closedFormMarkov.toString() + ", ledgers " +
                     rec.ledgerClosedFormPaper.toString() + "/" +
                     rec.ledgerClosedFormMarkov.toString() + "/" +
                     rec.ledgerExactLocal.toString() + ")";
        break;
    }
    col.push(std::move(r));
  }
}

void runOne(const std::string& suite, Collector& col, const VerifyConfig& cfg) {
  if (suite == "counts") {
    suiteCounts(col);
  } else if (suite == "limbs") {
    suiteLimbs(col);
  } else if (suite == "polys") {
    suitePolys(col);
  } else if (suite == "intersections") {
    suiteIntersections(col, cfg);
  } else {
    throw std::domain_error("verify: unknown suite '" + suite + "'");
  }
}

std::string jsonEscape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

std::string csvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

std::string mdCell(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Adjudicated: return "adjudicated";
  }
  return "fail";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"counts", "limbs", "polys", "intersections",
                                                 "all"};
  return names;
}

bool is_suite_name(const std::string& s) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), s) != names.end();
}

ReportDocument run_suite(const std::string& suite, const VerifyConfig& config) {
  if (!is_suite_name(suite)) throw std::domain_error("verify: unknown suite '" + suite + "'");
  ReportDocument doc;
  doc.suite = suite;
  doc.toolVersion = kToolVersion;
  doc.configEcho = "precision=" + std::to_string(config.precisionBits) +
                   ";product-budget=" + std::to_string(config.productBudget);
  Collector col(&doc.checks);
  if (suite == "all") {
    for (const std::string& s : suite_names())
      if (s != "all") runOne(s, col, config);
  } else {
    runOne(suite, col, config);
  }
  std::sort(doc.checks.begin(), doc.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  for (const CheckResult& c : doc.checks) {
    switch (c.status) {
      case CheckStatus::Pass: ++doc.passCount; break;
      case CheckStatus::Fail: ++doc.failCount; break;
      case CheckStatus::Adjudicated: ++doc.adjudicatedCount; break;
    }
  }
  return doc;
}

bool has_hard_failure(const ReportDocument& doc) {
  for (const CheckResult& c : doc.checks)
    if (c.status == CheckStatus::Fail) return true;
  return false;
}

bool has_unresolved_adjudication(const ReportDocument& doc) {
  for (const CheckResult& c : doc.checks)
    if (c.status == CheckStatus::Adjudicated && c.unresolved) return true;
  return false;
}

std::string report_json(const ReportDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"tool\": \"" << jsonEscape(doc.toolVersion) << "\",\n";
  os << "  \"suite\": \"" << jsonEscape(doc.suite) << "\",\n";
  os << "  \"config\": \"" << jsonEscape(doc.configEcho) << "\",\n";
  os << "  \"summary\": {\"pass\": " << doc.passCount << ", \"fail\": " << doc.failCount
     << ", \"adjudicated\": " << doc.adjudicatedCount
     << ", \"total\": " << static_cast<long>(doc.checks.size()) << "},\n";
  os << "  \"checks\": [";
  bool first = true;
  for (const CheckResult& c : doc.checks) {
    os << (first ? "\n" : ",\n");
    first = false;
    os << "    {\"id\": \"" << jsonEscape(c.id) << "\", \"status\": \""
       << check_status_name(c.status) << "\", \"expected\": \"" << jsonEscape(c.expected)
       << "\", \"computed\": \"" << jsonEscape(c.computed) << "\", \"citation\": \""
       << jsonEscape(c.citation) << "\"";
    if (c.status == CheckStatus::Adjudicated)
      os << ", \"unresolved\": " << (c.unresolved ? "true" : "false");
    os << "}";
  }
  os << (first ? "" : "\n  ") << "]\n";
  os << "}\n";
  return os.str();
}

std::string report_csv(const ReportDocument& doc) {
  std::ostringstream os;
  os << "# tool: " << doc.toolVersion << "\n";
  os << "# suite: " << doc.suite << "\n";
  os << "# config: " << doc.configEcho << "\n";
  os << "# summary: pass=" << doc.passCount << " fail=" << doc.failCount
     << " adjudicated=" << doc.adjudicatedCount << " total=" << doc.checks.size() << "\n";
  os << "id,status,expected,computed,citation,unresolved\n";
  for (const CheckResult& c : doc.checks) {
    os << csvField(c.id) << "," << check_status_name(c.status) << "," << csvField(c.expected)
       << "," << csvField(c.computed) << "," << csvField(c.citation) << ",";
    if (c.status == CheckStatus::Adjudicated) os << (c.unresolved ? "true" : "false");
    os << "\n";
  }
  return os.str();
}

std::string report_md(const ReportDocument& doc) {
  std::ostringstream os;
  os << "# Verification report: " << doc.suite << "\n\n";
  os << "- tool: " << doc.toolVersion << "\n";
  os << "- config: " << doc.configEcho << "\n";
  os << "- summary: " << doc.passCount << " pass / " << doc.failCount << " fail / "
     << doc.adjudicatedCount << " adjudicated (total " << doc.checks.size() << ")\n\n";
  os << "| id | status | expected | computed | citation |\n";
  os << "|---|---|---|---|---|\n";
  for (const CheckResult& c : doc.checks) {
    std::string status = check_status_name(c.status);
    if (c.status == CheckStatus::Adjudicated && c.unresolved) status += " (unresolved)";
    os << "| " << mdCell(c.id) << " | " << status << " | " << mdCell(c.expected) << " | "
       << mdCell(c.computed) << " | " << mdCell(c.citation) << " |\n";
  }
  return os.str();
}

const char* tool_version() { return kToolVersion; }

}  // namespace qrc

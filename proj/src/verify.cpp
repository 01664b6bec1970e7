#include "specfac/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "specfac/config.hpp"
#include "specfac/criterion.hpp"
#include "specfac/enumerate.hpp"
#include "specfac/errors.hpp"
#include "specfac/factor_search.hpp"
#include "specfac/graph6.hpp"
#include "specfac/matrix.hpp"
#include "specfac/parallel.hpp"
#include "specfac/random_graphs.hpp"
#include "specfac/sign_claims.hpp"
#include "specfac/thresholds.hpp"

namespace specfac {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
};

CheckRecord record(json params, json expected, json observed, bool pass,
                   double tol = 0.0) {
  CheckRecord r;
  r.params = params.dump();
  r.expected = expected.dump();
  r.observed = observed.dump();
  r.pass = pass;
  r.tol = tol;
  return r;
}

// The one-hub extremal graph K_1 v (K_{n-3} u 2K_1).
Graph extremal_graph(int n) { return construct_family(1, n - 3, 2); }

Graph bound_witness(int n) {
  if (n == 6) return construct_family(2, 0, 4);
  if (n == 8) return construct_family(3, 0, 5);
  return extremal_graph(n);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t x = seed ^ (salt * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

long F_bound(int n) {
  if (n < 5) throw std::invalid_argument("edge bound defined for n >= 5");
  if (n == 6) return 9;
  if (n == 8) return 18;
  const long m = n - 2;
  return m * (m - 1) / 2 + 2;
}

VerificationReport verify_theorem1(int n) {
  Timer timer;
  VerificationReport rep;
  rep.harness = "theorem1";
  const long bound = F_bound(n);

  long graphs = 0, above = 0, above_without_factor = 0;
  long at_bound_without_factor = 0;
  std::string sharp_label;
  std::vector<int> sharp_witness;
  int sharp_isolated = 0;
  for_each_connected(n, [&](const Graph& g) {
    ++graphs;
    const long m = g.edge_count();
    if (m < bound) return;
    const CriterionResult cr = has_factor_criterion(g);
    if (m > bound) {
      ++above;
      if (!cr.holds) ++above_without_factor;
    } else if (!cr.holds) {
      ++at_bound_without_factor;
      if (sharp_label.empty()) {
        sharp_label = graph6_encode(g);
        sharp_witness = cr.witness;
        sharp_isolated = cr.isolated;
      }
    }
  });
  rep.add(record({{"n", n}, {"bound", bound}},
                 "every connected graph with more edges than the bound passes the removal criterion",
                 {{"graphs", graphs}, {"above_bound", above},
                  {"above_bound_without_factor", above_without_factor}},
                 above > 0 && above_without_factor == 0));
  rep.add(record({{"n", n}, {"bound", bound}},
                 "some connected graph meeting the bound exactly fails the criterion",
                 {{"at_bound_without_factor", at_bound_without_factor},
                  {"witness", sharp_label},
                  {"witness_set", sharp_witness},
                  {"isolated", sharp_isolated}},
                 at_bound_without_factor > 0));

  const Graph w = bound_witness(n);
  const CriterionResult wr = has_factor_criterion(w);
  rep.add(record({{"n", n}, {"witness", graph6_encode(w)}},
                 "the named witness meets the bound exactly and fails the criterion",
                 {{"edges", w.edge_count()}, {"holds", wr.holds},
                  {"witness_set", wr.witness}, {"isolated", wr.isolated}},
                 w.edge_count() == bound && !wr.holds));
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport verify_theorem2(double alpha, const std::vector<int>& ns,
                                   long trials, std::uint64_t seed) {
  Timer timer;
  VerificationReport rep;
  rep.harness = "theorem2";
  for (const int n : ns) {
    if (!order_ok(n, alpha))
      throw std::invalid_argument("order " + std::to_string(n) +
                                  " is below the stated floor for alpha = " +
                                  format_double(alpha));
    if (n > kCriterionCap)
      throw cap_error("order " + std::to_string(n) +
                      " exceeds the exhaustive criterion cap");
    const double tau = tau_threshold(n, alpha);

    // Every hub family at this order stays at or below the threshold, with
    // equality exactly at the one-hub extremal graph; none of them has a
    // factor, so the threshold cannot be lowered.
    long families = 0;
    bool sweep_ok = true;
    double smallest_gap_elsewhere = 1e300;
    for (int s = 1;; ++s) {
      const int isolated = floor_3s2(s) + 1;
      const int n1 = n - s - isolated;
      if (n1 < 1) break;
      ++families;
      const Graph g = construct_family(s, n1, isolated);
      const double rho = rho_alpha(g, alpha);
      const CriterionResult cr = criterion_via_independent_sets(g);
      const bool at_threshold = std::abs(rho - tau) <= kEigTol;
      const bool ok =
          !cr.holds && rho <= tau + kEigTol && (at_threshold == (s == 1));
      if (s > 1) smallest_gap_elsewhere = std::min(smallest_gap_elsewhere, tau - rho);
      if (!ok) sweep_ok = false;
      if (s == 1)
        rep.add(record({{"n", n}, {"alpha", round15(alpha)}, {"s", 1}},
                       "extremal graph sits exactly at the threshold and has no factor",
                       {{"rho", round15(rho)}, {"tau", round15(tau)},
                        {"holds", cr.holds}, {"witness_set", cr.witness},
                        {"isolated", cr.isolated}},
                       ok, kEigTol));
    }
    rep.add(record({{"n", n}, {"alpha", round15(alpha)}},
                   "all larger hub families stay strictly below the threshold",
                   {{"families", families},
                    {"smallest_gap_above_s1", round15(smallest_gap_elsewhere)}},
                   sweep_ok && families >= 2, kEigTol));

    // Complete graph: a positive control above the threshold.
    {
      const Graph k = complete(n);
      const double rho = rho_alpha(k, alpha);
      const CriterionResult cr = criterion_via_independent_sets(k);
      rep.add(record({{"n", n}, {"alpha", round15(alpha)}},
                     "complete graph exceeds the threshold and passes the criterion",
                     {{"rho", round15(rho)}, {"tau", round15(tau)}, {"holds", cr.holds}},
                     rho > tau && cr.holds));
    }

    // Random sweep: whenever a sample's radius exceeds the threshold, the
    // removal criterion must hold.
    const double probs[] = {0.3, 0.5, 0.8, 0.95};
    std::vector<signed char> outcome(trials, 0);
    parallel_for(trials, default_jobs(), [&](long t) {
      std::mt19937_64 rng(mix_seed(seed, (std::uint64_t(n) << 32) ^ t));
      const double p = probs[t % 4];
      Graph g;
      try {
        g = random_connected_gnp(n, p, rng);
      } catch (const std::runtime_error&) {
        outcome[t] = 3;
        return;
      }
      if (rho_alpha(g, alpha) <= tau) return;
      outcome[t] = criterion_via_independent_sets(g).holds ? 1 : 2;
    });
    for (int pi = 0; pi < 4; ++pi) {
      long swept = 0, exceeded = 0, violations = 0, skipped = 0;
      for (long t = pi; t < trials; t += 4) {
        ++swept;
        if (outcome[t] == 3) ++skipped;
        if (outcome[t] == 1 || outcome[t] == 2) ++exceeded;
        if (outcome[t] == 2) ++violations;
      }
      rep.skipped += skipped;
      rep.add(record({{"n", n}, {"alpha", round15(alpha)}, {"p", probs[pi]}},
                     "sampled graphs above the threshold always pass the criterion",
                     {{"trials", swept}, {"exceeded", exceeded},
                      {"implication_failures", violations}, {"skipped", skipped}},
                     violations == 0));
    }
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport verify_corollary3(const std::vector<int>& ns) {
  Timer timer;
  VerificationReport rep;
  rep.harness = "corollary3";
  for (const int n : ns) {
    const double mu = mu_threshold(n);
    const double q = q_index(extremal_graph(n));
    rep.add(record({{"n", n}},
                   "doubled threshold root equals the signless-Laplacian index of the extremal graph",
                   {{"two_mu", round15(2 * mu)}, {"q", round15(q)},
                    {"diff", round15(std::abs(2 * mu - q))}},
                   std::abs(2 * mu - q) <= kEigTol, kEigTol));

    const Cubic qc = q_threshold_cubic(n);
    const Cubic half = threshold_cubic(n, 0.5);
    const double worst =
        std::max({std::abs(qc.a - half.a), std::abs(qc.b - half.b),
                  std::abs(qc.c - half.c)});
    rep.add(record({{"n", n}},
                   "quartered defining cubic matches the alpha = 1/2 threshold cubic",
                   {{"coeff_diff", round15(worst)}}, worst <= 1e-12, 1e-12));

    const double display[4] = {4.0, -(6.0 * n - 14.0), 2.0 * n * n - 7.0 * n,
                               -(double(n) * n - 7.0 * n + 12.0)};
    const double rebuilt[4] = {4.0, 4 * qc.a, 4 * qc.b, 4 * qc.c};
    double coeff_worst = 0.0;
    for (int i = 0; i < 4; ++i)
      coeff_worst = std::max(coeff_worst, std::abs(display[i] - rebuilt[i]));
    rep.add(record({{"n", n}},
                   "scaling the monic form by four reproduces the integer coefficients",
                   {{"coeff_diff", round15(coeff_worst)}}, coeff_worst <= 1e-12,
                   1e-12));
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport verify_lemma_equivalence(int max_n) {
  Timer timer;
  VerificationReport rep;
  rep.harness = "lemma-equivalence";
  static const long known_counts[] = {0, 1,  1,   2,    6,    21,
                                      112, 853, 11117, 261080};
  for (int n = 1; n <= max_n; ++n) {
    long graphs = 0, mismatches = 0, bad_certificates = 0;
    std::string first_bad;
    for_each_connected(n, [&](const Graph& g) {
      ++graphs;
      const CriterionResult subset = has_factor_criterion(g);
      const CriterionResult indep = criterion_via_independent_sets(g);
      const FactorSearchResult search = find_factor(g);
      if (subset.holds != indep.holds || subset.holds != search.found) {
        ++mismatches;
        if (first_bad.empty()) first_bad = graph6_encode(g);
        return;
      }
      if (search.found) {
        std::string why;
        if (!verify_certificate(g, search.certificate, &why)) {
          ++bad_certificates;
          if (first_bad.empty()) first_bad = graph6_encode(g);
        }
      }
    });
    const bool count_known = n < static_cast<int>(std::size(known_counts));
    const long expected_count = count_known ? known_counts[n] : -1;
    rep.add(record(
        {{"n", n}},
        "subset criterion, independent-set criterion, and explicit search agree",
        {{"graphs", graphs}, {"expected_graphs", expected_count},
         {"mismatches", mismatches}, {"bad_certificates", bad_certificates},
         {"first_disagreement", first_bad}},
        mismatches == 0 && bad_certificates == 0 &&
            (!count_known || graphs == expected_count)));
  }
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport verify_spectral_ordering(long trials, std::uint64_t seed) {
  Timer timer;
  VerificationReport rep;
  rep.harness = "spectral-ordering";
  const double alphas[] = {0.0, 0.25, 0.5, 0.75, 0.9};

  for (const double a : alphas) {
    double worst = 0.0;
    for (int n = 1; n <= 30; ++n)
      worst = std::max(worst, std::abs(rho_alpha(complete(n), a) - (n - 1)));
    rep.add(record({{"alpha", a}, {"max_n", 30}},
                   "complete-graph radius equals n-1",
                   {{"max_abs_err", round15(worst)}}, worst <= 1e-10, 1e-10));
  }

  std::vector<signed char> outcome(trials, 0);  // 0 ok, 1 skip, 2 violation
  parallel_for(trials, default_jobs(), [&](long t) {
    std::mt19937_64 rng(mix_seed(seed, 0xabcdef ^ std::uint64_t(t)));
    const int n = 5 + static_cast<int>(t % 8);
    const double a = alphas[t % 5];
    const double p = 0.2 + 0.2 * (t % 4);
    Graph g;
    try {
      g = random_connected_gnp(n, p, rng);
    } catch (const std::runtime_error&) {
      outcome[t] = 1;
      return;
    }
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) missing.push_back({u, v});
    if (missing.empty()) {
      outcome[t] = 1;
      return;
    }
    std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
    const Edge e = missing[pick(rng)];
    std::vector<Edge> edges = edge_list(g);
    edges.push_back(e);
    const double before = rho_alpha(g, a);
    const double after = rho_alpha(make_graph(n, edges), a);
    if (!(after > before + 1e-9)) outcome[t] = 2;
  });
  long skipped = 0, violations = 0;
  for (long t = 0; t < trials; ++t) {
    if (outcome[t] == 1) ++skipped;
    if (outcome[t] == 2) ++violations;
  }
  rep.skipped += skipped;
  rep.add(record({{"trials", trials}},
                 "adding any missing edge strictly increases the radius",
                 {{"violations", violations}, {"skipped", skipped}},
                 violations == 0 && trials - skipped > 0, 1e-9));
  rep.wall_ms = timer.ms();
  return rep;
}

VerificationReport check_sign_claims() {
  Timer timer;
  VerificationReport rep;
  rep.harness = "signclaims";
  for (const SignClaim& c : sign_claim_registry()) {
    const SignClaimOutcome out = run_sign_claim(c);
    rep.add(record({{"claim", c.name}, {"domain", c.domain}},
                   {{"sign", c.expected_sign}, {"allow_zero", c.allow_zero},
                    {"min_points", 100}},
                   {{"points", out.points}, {"violations", out.violations},
                    {"worst", round15(out.worst)},
                    {"at", {{"s", out.worst_point.s}, {"n", out.worst_point.n},
                            {"alpha", round15(out.worst_point.alpha)}}}},
                   out.violations == 0 && out.points >= 100, c.slack));
  }
  rep.wall_ms = timer.ms();
  return rep;
}

}  // namespace specfac

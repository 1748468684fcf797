#include "vc1/erm.hpp"

#include <algorithm>
#include <cmath>

#include "vc1/rng.hpp"

namespace vc1 {

OrdinalClassConfig OrdinalClassConfig::identity(std::size_t n) {
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[i] = i + 1;
  return from_ranks(std::move(rank));
}

OrdinalClassConfig OrdinalClassConfig::from_ranks(std::vector<std::size_t> rank) {
  if (rank.empty()) throw ValidationError("rank permutation must be nonempty");
  std::vector<std::uint8_t> seen(rank.size() + 1, 0);
  for (std::size_t r : rank) {
    if (r < 1 || r > rank.size())
      throw ValidationError("rank " + std::to_string(r) + " outside 1.." +
                            std::to_string(rank.size()));
    if (seen[r]++) throw ValidationError("duplicate rank " + std::to_string(r));
  }
  OrdinalClassConfig cfg;
  cfg.n = rank.size();
  cfg.rank = std::move(rank);
  return cfg;
}

OrdinalClassConfig OrdinalClassConfig::random(std::size_t n, std::uint64_t seed) {
  auto cfg = identity(n);
  Rng rng(seed);
  rng.shuffle(cfg.rank);
  return cfg;
}

ConceptClass build_ordinal_class(const OrdinalClassConfig& cfg) {
  std::vector<Hypothesis> hypotheses;
  hypotheses.reserve(cfg.n + 1);
  hypotheses.push_back(Hypothesis::ones(cfg.n));
  for (std::size_t r = 0; r < cfg.n; ++r) {
    std::vector<Label> labels(cfg.n);
    for (std::size_t s = 0; s < cfg.n; ++s)
      labels[s] = cfg.rank[s] < cfg.rank[r] ? 1 : 0;
    hypotheses.emplace_back(std::move(labels));
  }
  return ConceptClass(Domain::indexed(cfg.n), std::move(hypotheses));
}

Hypothesis bad_erm(const LabeledSample& sample, const OrdinalClassConfig& cfg,
                   SegmentConvention convention) {
  std::size_t pivot_rank = 0;
  for (const auto& [point, label] : sample) {
    if (point >= cfg.n) throw ValidationError("sample point index out of range");
    if (label == 1) pivot_rank = std::max(pivot_rank, cfg.rank[point]);
  }
  if (pivot_rank == 0)
    throw ValidationError("sample has no positively labeled point");

  std::vector<Label> labels(cfg.n);
  for (std::size_t s = 0; s < cfg.n; ++s) {
    const bool inside = convention == SegmentConvention::closed
                            ? cfg.rank[s] <= pivot_rank
                            : cfg.rank[s] < pivot_rank;
    labels[s] = inside ? 1 : 0;
  }
  return Hypothesis(std::move(labels));
}

ErmTrialResult erm_trial(const OrdinalClassConfig& cfg, const LabeledSample& sample,
                         SegmentConvention convention) {
  ErmTrialResult result;
  result.sample = sample;
  result.chosen = bad_erm(sample, cfg, convention);
  result.empirical_risk = empirical_loss(result.chosen, sample);
  result.true_error = true_error_uniform(result.chosen, Hypothesis::ones(cfg.n));
  return result;
}

Rational exact_expected_error(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw ValidationError("n and m must be positive");
  mpz_class sum = 0, term;
  for (std::size_t k = 1; k < n; ++k) {
    mpz_ui_pow_ui(term.get_mpz_t(), k, m);
    sum += term;
  }
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), n, static_cast<unsigned long>(m) + 1);
  Rational q(sum, denom);
  q.canonicalize();
  return q;
}

MonteCarloReport monte_carlo_error(const OrdinalClassConfig& cfg, std::size_t m,
                                   std::size_t trials, std::uint64_t seed,
                                   SegmentConvention convention) {
  if (trials == 0) throw ValidationError("at least one trial is required");
  if (m == 0) throw ValidationError("sample size must be positive");

  double sum = 0.0, sum_sq = 0.0;
  const Hypothesis target = Hypothesis::ones(cfg.n);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(seed + t);
    LabeledSample sample;
    sample.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
      sample.push_back({static_cast<std::size_t>(rng.below(cfg.n)), 1});
    const Hypothesis chosen = bad_erm(sample, cfg, convention);
    const double err = to_double(true_error_uniform(chosen, target));
    sum += err;
    sum_sq += err * err;
  }

  MonteCarloReport report;
  report.trials = trials;
  report.sample_size = m;
  report.seed = seed;
  report.generator = kGeneratorId;
  report.mean = sum / static_cast<double>(trials);
  if (trials > 1) {
    const double var =
        std::max(0.0, (sum_sq - sum * sum / static_cast<double>(trials)) /
                          static_cast<double>(trials - 1));
    report.half_width = 3.0 * std::sqrt(var / static_cast<double>(trials));
  }
  return report;
}

FubiniReport fubini_check(const OrdinalClassConfig& cfg) {
  const std::size_t n = cfg.n;
  // Inner average first over x, then over y ...
  unsigned long row_total = 0;
  for (std::size_t y = 0; y < n; ++y) {
    std::size_t inner = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (cfg.rank[x] < cfg.rank[y]) ++inner;
    row_total += inner;
  }
  // ... and in the transposed nesting.
  unsigned long col_total = 0;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t inner = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (cfg.rank[x] < cfg.rank[y]) ++inner;
    col_total += inner;
  }

  FubiniReport report;
  const mpz_class n2 = mpz_class(static_cast<unsigned long>(n)) *
                       mpz_class(static_cast<unsigned long>(n));
  report.row_mean = Rational(mpz_class(row_total), n2);
  report.row_mean.canonicalize();
  report.col_mean = Rational(mpz_class(col_total), n2);
  report.col_mean.canonicalize();
  report.pair_count = static_cast<std::size_t>(row_total);
  return report;
}

}  // namespace vc1

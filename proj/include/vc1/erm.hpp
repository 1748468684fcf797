#pragma once

// Finite ordinal-segment classes and the ERM rule that memorizes only the
// maximal positively-labeled rank. On a finite domain the rule's expected
// error decays with the sample size, and both iterated averages of the
// rank-comparison indicator agree; the module computes both facts exactly.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vc1/concept_class.hpp"
#include "vc1/rational.hpp"

namespace vc1 {

// A domain of n points together with a permutation assigning each point a
// rank in {1..n}; ranks order the points for segment construction.
struct OrdinalClassConfig {
  std::size_t n = 0;
  std::vector<std::size_t> rank;  // point -> rank, a bijection onto {1..n}

  static OrdinalClassConfig identity(std::size_t n);
  static OrdinalClassConfig from_ranks(std::vector<std::size_t> rank);
  static OrdinalClassConfig random(std::size_t n, std::uint64_t seed);
};

// Whether a learned segment includes the pivot rank itself. The open form is
// the literal "strictly below" segment, which leaves the pivot mislabeled on
// finite domains; the closed form is the unique empirical-risk-0 variant and
// the default everywhere.
enum class SegmentConvention { closed, open };

// The full-domain hypothesis plus, for every point r, the set of points of
// strictly smaller rank. Always n+1 distinct hypotheses, VC dimension 1.
ConceptClass build_ordinal_class(const OrdinalClassConfig& cfg);

// ERM rule: find the maximal rank among positively labeled sample points and
// return the segment at that pivot. Requires at least one positive point.
Hypothesis bad_erm(const LabeledSample& sample, const OrdinalClassConfig& cfg,
                   SegmentConvention convention = SegmentConvention::closed);

struct ErmTrialResult {
  LabeledSample sample;
  Hypothesis chosen;
  Rational empirical_risk;
  Rational true_error;  // against the all-ones target
};

ErmTrialResult erm_trial(const OrdinalClassConfig& cfg, const LabeledSample& sample,
                         SegmentConvention convention = SegmentConvention::closed);

// Expectation of the rule's true error over m i.i.d. uniform draws labeled by
// the all-ones target, with the closed convention: (1/n) * sum_{k<n} (k/n)^m,
// as an exact rational.
Rational exact_expected_error(std::size_t n, std::size_t m);

struct MonteCarloReport {
  double mean = 0.0;
  double half_width = 0.0;  // three standard errors
  std::size_t trials = 0;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  std::string generator;  // algorithm identifier, see rng.hpp
};

// Empirical counterpart of exact_expected_error; deterministic for a fixed
// seed, with per-trial generators seeded seed + trial index.
MonteCarloReport monte_carlo_error(const OrdinalClassConfig& cfg, std::size_t m,
                                   std::size_t trials, std::uint64_t seed,
                                   SegmentConvention convention = SegmentConvention::closed);

struct FubiniReport {
  Rational row_mean;        // average over y of the mass of {x : rank x < rank y}
  Rational col_mean;        // average over x of the mass of {y : rank x < rank y}
  std::size_t pair_count = 0;  // ordered pairs with rank x < rank y
};

// Both iterated uniform averages of the indicator of {(x,y) : rank x < rank y}.
// They coincide at (n-1)/(2n) for every permutation: the iterated-integral
// discrepancy possible over uncountable domains has no finite counterpart.
FubiniReport fubini_check(const OrdinalClassConfig& cfg);

// Statement printed by ERM reports; kept in one place so reports and their
// tests agree on the wording.
inline constexpr const char* kFiniteScaleNote =
    "note: on a finite domain the expected error of this rule decays to 0 as "
    "the sample grows; an error of 1 with probability 1 at every sample size "
    "requires an uncountable domain and has no finite-scale counterpart.";

}  // namespace vc1

#pragma once

// Size-1 unlabeled sample compression for classes of VC dimension <= 1.
// The compressor keeps the order-maximal sample point that disagrees with
// the reference labeling f (or nothing), and the reconstructor returns
// f flipped on the down-set of that point.

#include <cstddef>
#include <optional>
#include <string>

#include "vc1/concept_class.hpp"
#include "vc1/order.hpp"

namespace vc1 {

// Empty, or one unlabeled domain point.
struct CompressedSample {
  std::optional<std::size_t> point;

  bool empty() const { return !point.has_value(); }
};

struct SchemeContext {
  ConceptClass cls;
  TreeOrderCertificate certificate;
};

// Builds the certificate for the class; throws PreconditionError naming the
// shattered pair when the class has VC dimension >= 2.
SchemeContext make_scheme_context(const ConceptClass& cls,
                                  std::optional<Hypothesis> f = std::nullopt);

// The sample must be realizable by some member of the class; the retained
// point is the minimum-index sample point in the order-maximal disagreeing
// quotient class, so the output is always drawn from the sample itself.
CompressedSample compress(const LabeledSample& sample, const SchemeContext& ctx);

// Flips f on the down-set of the retained point, lifted through the
// quotient; the empty message reconstructs f itself. Output is a full
// hypothesis over the original domain.
Hypothesis reconstruct(const CompressedSample& message, const SchemeContext& ctx);

struct SchemeVerification {
  bool passed = true;
  std::size_t sample_sets_checked = 0;  // (hypothesis, nonempty subset) pairs, plus the empty sample
  std::size_t label_checks = 0;
  std::string first_failure;
};

// Exhaustively replays every sample a class member induces on every point
// subset of size <= up_to_m, checking that reconstruct(compress(S)) relabels
// S exactly and that compress ignores sample order.
SchemeVerification verify_scheme(const ConceptClass& cls, std::size_t up_to_m);

}  // namespace vc1

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vc1/errors.hpp"
#include "vc1/rational.hpp"

namespace vc1 {

using Label = std::uint8_t;

// Ordered list of distinct point identifiers.
class Domain {
 public:
  explicit Domain(std::vector<std::string> points);

  // p0, p1, ..., p(n-1)
  static Domain indexed(std::size_t n);

  std::size_t size() const { return points_.size(); }
  const std::string& name(std::size_t i) const { return points_[i]; }
  const std::vector<std::string>& points() const { return points_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Domain&) const = default;

 private:
  std::vector<std::string> points_;
};

// Binary labeling of a fixed-size domain, one label per point.
class Hypothesis {
 public:
  Hypothesis() = default;
  explicit Hypothesis(std::vector<Label> labels);

  static Hypothesis from_string(std::string_view bits);
  static Hypothesis zeros(std::size_t n);
  static Hypothesis ones(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  Label operator()(std::size_t point) const { return labels_[point]; }
  const std::vector<Label>& labels() const { return labels_; }
  std::string to_string() const;

  // Pointwise disagreement indicator; both operands must have equal size.
  Hypothesis operator^(const Hypothesis& other) const;

  auto operator<=>(const Hypothesis&) const = default;  // lexicographic

 private:
  std::vector<Label> labels_;
};

// Nonempty set of hypotheses over a shared domain. Stored deduplicated and
// sorted lexicographically, so iteration order is reproducible and the first
// element is the lexicographically least member.
class ConceptClass {
 public:
  ConceptClass(Domain domain, std::vector<Hypothesis> hypotheses);

  const Domain& domain() const { return domain_; }
  const std::vector<Hypothesis>& hypotheses() const { return hypotheses_; }
  std::size_t size() const { return hypotheses_.size(); }
  const Hypothesis& lex_min() const { return hypotheses_.front(); }
  bool contains(const Hypothesis& h) const;

 private:
  Domain domain_;
  std::vector<Hypothesis> hypotheses_;
};

struct LabeledPair {
  std::size_t point;
  Label label;
  bool operator==(const LabeledPair&) const = default;
};

using LabeledSample = std::vector<LabeledPair>;

// Partition of the domain into classes of points no hypothesis distinguishes.
struct QuotientMap {
  // point -> minimum index of its class
  std::vector<std::size_t> representative;
  // classes sorted internally, ordered by representative
  std::vector<std::vector<std::size_t>> classes;
  // point -> position of its class in `classes`
  std::vector<std::size_t> class_index;

  std::size_t num_classes() const { return classes.size(); }
  bool is_identity() const;
};

// Distinct restrictions of the hypotheses to the given points, each vector
// indexed in ascending point order. Duplicate input points are collapsed.
std::set<std::vector<Label>> patterns(const ConceptClass& cls,
                                      std::span<const std::size_t> points);

bool shatters(const ConceptClass& cls, std::span<const std::size_t> points);

// Largest size of a shattered point set. Exhaustive by increasing size with
// early termination; candidate sizes are capped at floor(log2(|H|)) since
// shattering k points takes 2^k hypotheses.
std::size_t vc_dimension(const ConceptClass& cls);

struct VcWitness {
  std::size_t dimension = 0;
  std::vector<std::size_t> witness;  // lexicographically first shattered set of that size
};

VcWitness vc_dimension_witness(const ConceptClass& cls);

// {h XOR f : h in H}; f need not belong to H but must match the domain size.
ConceptClass f_representation(const ConceptClass& cls, const Hypothesis& f);

// Groups points whose label column is identical across all hypotheses and
// restricts the class to class representatives. In the result every two
// points are distinguished by some hypothesis.
std::pair<QuotientMap, ConceptClass> quotient_indistinguishable(const ConceptClass& cls);

// Fraction of sample pairs the hypothesis mislabels. The sample must be nonempty.
Rational empirical_loss(const Hypothesis& h, const LabeledSample& sample);

// Hamming distance divided by the domain size (uniform marginal).
Rational true_error_uniform(const Hypothesis& h, const Hypothesis& target);

// Some member of H consistent with every pair of the sample, if one exists.
std::optional<Hypothesis> find_consistent(const ConceptClass& cls,
                                          const LabeledSample& sample);

void validate_sample(const ConceptClass& cls, const LabeledSample& sample);

}  // namespace vc1

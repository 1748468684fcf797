#pragma once

// Structure analysis for concept classes of VC dimension at most 1: the
// disagreement order over quotient classes, tree-order certificates, and
// constructive shattered-pair refutations. A certificate exists exactly when
// the class family of disagreement sets is laminar (any two nested or
// disjoint), which is the executable form of the dimension-1 criterion.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "vc1/concept_class.hpp"

namespace vc1 {

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

// Dense n-by-n relation; holds(x, y) reads "x lies at or below y". Freshly
// constructed relations are reflexive.
class OrderRelation {
 public:
  explicit OrderRelation(std::size_t n);

  std::size_t size() const { return n_; }
  bool holds(std::size_t x, std::size_t y) const { return cells_[x * n_ + y] != 0; }
  void set(std::size_t x, std::size_t y, bool value = true);
  bool comparable(std::size_t x, std::size_t y) const {
    return holds(x, y) || holds(y, x);
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> cells_;
};

struct OrderViolation {
  enum class Axiom { reflexivity, transitivity, antisymmetry };
  Axiom axiom{};
  std::size_t x = 0, y = 0, z = 0;  // z is meaningful for transitivity only
  std::string describe() const;
};

// nullopt when the relation is a partial order, else the first violation.
std::optional<OrderViolation> verify_partial_order(const OrderRelation& order);

struct TreeOrderViolation {
  std::size_t x = 0;       // the down-set that is not a chain
  std::size_t y = 0, z = 0;  // both below x, mutually incomparable
};

// nullopt when every down-set {y : holds(y, x)} is a chain.
std::optional<TreeOrderViolation> verify_tree_order(const OrderRelation& order);

// true iff the member set is down-closed: y in set and holds(x, y) imply x in set.
bool is_initial_segment(std::span<const std::size_t> members, const OrderRelation& order);

struct TreeOrderCertificate {
  Hypothesis f;        // the chosen representation, a member of the class
  QuotientMap quotient;
  OrderRelation order;  // over quotient classes, in representative order
};

// Two points and four class members realizing all four label patterns on them.
struct ShatteredPairWitness {
  std::size_t y = 0, z = 0;  // original point indices
  Hypothesis h00, h10, h01, h11;
};

using StructureCertificate = std::variant<TreeOrderCertificate, ShatteredPairWitness>;

// The literal disagreement relation: holds(x, y) iff every hypothesis that
// disagrees with f at y also disagrees with f at x. Reflexive and transitive
// for any class. Not always antisymmetric: two points whose columns are
// complementary have identical disagreement sets and end up mutually related.
// Requires a quotiented class and f a member of it.
OrderRelation build_order(const ConceptClass& quotiented, const Hypothesis& f);

// The order carried by certificates: the literal relation with ties between
// equal disagreement sets broken toward the smaller representative, and
// points no hypothesis disagrees on kept isolated rather than becoming
// vacuous tops. Always a partial order; a tree order iff the disagreement
// sets are laminar. Same preconditions as build_order.
OrderRelation build_certificate_order(const ConceptClass& quotiented, const Hypothesis& f);

// Quotients the class, builds the certificate order for f (default: the
// lexicographically least member), and either certifies every disagreement
// set as a down-closed chain or extracts a shattered pair with its four
// pattern witnesses. Total: one of the two outcomes is always produced, and
// a tree certificate comes back iff the class has VC dimension <= 1.
StructureCertificate structure_certificate(const ConceptClass& cls,
                                           std::optional<Hypothesis> f = std::nullopt);

inline bool is_tree_certificate(const StructureCertificate& cert) {
  return std::holds_alternative<TreeOrderCertificate>(cert);
}

// parent[i] = unique maximal strict predecessor of class i, or kNoParent for
// roots. Requires a tree order.
std::vector<std::size_t> parent_forest(const OrderRelation& order);

// Graphviz digraph of the certificate forest. Nodes are quotient classes
// labeled with their merged point names ("p0|p3"), edges run parent -> child.
std::string tree_dot(const TreeOrderCertificate& cert, const Domain& domain);

// Merged display label of one quotient class, e.g. "p0|p3".
std::string class_label(const QuotientMap& quotient, const Domain& domain,
                        std::size_t class_id);

}  // namespace vc1

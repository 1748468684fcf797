#include "vc1/order.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace vc1 {

OrderRelation::OrderRelation(std::size_t n) : n_(n), cells_(n * n, 0) {
  for (std::size_t i = 0; i < n_; ++i) cells_[i * n_ + i] = 1;
}

void OrderRelation::set(std::size_t x, std::size_t y, bool value) {
  cells_[x * n_ + y] = value ? 1 : 0;
}

std::string OrderViolation::describe() const {
  std::ostringstream out;
  switch (axiom) {
    case Axiom::reflexivity:
      out << "reflexivity fails at " << x;
      break;
    case Axiom::transitivity:
      out << "transitivity fails on (" << x << ", " << y << ", " << z << ")";
      break;
    case Axiom::antisymmetry:
      out << "antisymmetry fails on (" << x << ", " << y << ")";
      break;
  }
  return out.str();
}

std::optional<OrderViolation> verify_partial_order(const OrderRelation& order) {
  const std::size_t n = order.size();
  for (std::size_t x = 0; x < n; ++x)
    if (!order.holds(x, x))
      return OrderViolation{OrderViolation::Axiom::reflexivity, x, x, 0};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!order.holds(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (order.holds(y, z) && !order.holds(x, z))
          return OrderViolation{OrderViolation::Axiom::transitivity, x, y, z};
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (order.holds(x, y) && order.holds(y, x))
        return OrderViolation{OrderViolation::Axiom::antisymmetry, x, y, 0};
  return std::nullopt;
}

std::optional<TreeOrderViolation> verify_tree_order(const OrderRelation& order) {
  const std::size_t n = order.size();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> down;
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && order.holds(y, x)) down.push_back(y);
    for (std::size_t i = 0; i < down.size(); ++i)
      for (std::size_t j = i + 1; j < down.size(); ++j)
        if (!order.comparable(down[i], down[j]))
          return TreeOrderViolation{x, down[i], down[j]};
  }
  return std::nullopt;
}

bool is_initial_segment(std::span<const std::size_t> members, const OrderRelation& order) {
  std::vector<std::uint8_t> in_set(order.size(), 0);
  for (std::size_t m : members) {
    if (m >= order.size())
      throw ValidationError("initial-segment member index out of range");
    in_set[m] = 1;
  }
  for (std::size_t y : members)
    for (std::size_t x = 0; x < order.size(); ++x)
      if (order.holds(x, y) && !in_set[x]) return false;
  return true;
}

namespace {

// Disagreement sets as bitsets over hypothesis indices.
using HypSet = std::vector<std::uint64_t>;

HypSet make_set(std::size_t bits) { return HypSet((bits + 63) / 64, 0); }

void set_bit(HypSet& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }

bool test_bit(const HypSet& s, std::size_t i) {
  return (s[i / 64] >> (i % 64)) & 1;
}

bool any_bit(const HypSet& s) {
  for (auto w : s)
    if (w) return true;
  return false;
}

// a subset of b
bool subset(const HypSet& a, const HypSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// Disagreement set of every point: the hypotheses h with h(x) != f(x).
std::vector<HypSet> disagreement_sets(const ConceptClass& cls, const Hypothesis& f) {
  const std::size_t n = cls.domain().size();
  std::vector<HypSet> sets(n, make_set(cls.size()));
  for (std::size_t hi = 0; hi < cls.size(); ++hi) {
    const Hypothesis& h = cls.hypotheses()[hi];
    for (std::size_t x = 0; x < n; ++x)
      if (h(x) != f(x)) set_bit(sets[x], hi);
  }
  return sets;
}

void require_quotiented_and_member(const ConceptClass& cls, const Hypothesis& f) {
  if (f.size() != cls.domain().size())
    throw ValidationError("representation length does not match domain size");
  if (!cls.contains(f))
    throw ValidationError("representation must be a member of the class");
  std::unordered_set<std::string> columns;
  for (std::size_t x = 0; x < cls.domain().size(); ++x) {
    std::string col;
    col.reserve(cls.size());
    for (const auto& h : cls.hypotheses()) col.push_back(static_cast<char>('0' + h(x)));
    if (!columns.insert(std::move(col)).second)
      throw ValidationError("class is not quotiented: two points share every label");
  }
}

OrderRelation order_from_sets(const std::vector<HypSet>& sets, bool certificate_form) {
  const std::size_t n = sets.size();
  OrderRelation order(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      if (!certificate_form) {
        order.set(x, y, subset(sets[y], sets[x]));
        continue;
      }
      // Certificate form: strictly below only points some hypothesis
      // disagrees on, with equal-set ties broken toward the smaller index.
      bool below = false;
      if (any_bit(sets[y]) && subset(sets[y], sets[x]))
        below = !subset(sets[x], sets[y]) || x < y;
      order.set(x, y, below);
    }
  return order;
}

}  // namespace

OrderRelation build_order(const ConceptClass& quotiented, const Hypothesis& f) {
  require_quotiented_and_member(quotiented, f);
  return order_from_sets(disagreement_sets(quotiented, f), /*certificate_form=*/false);
}

OrderRelation build_certificate_order(const ConceptClass& quotiented, const Hypothesis& f) {
  require_quotiented_and_member(quotiented, f);
  return order_from_sets(disagreement_sets(quotiented, f), /*certificate_form=*/true);
}

StructureCertificate structure_certificate(const ConceptClass& cls,
                                           std::optional<Hypothesis> f_opt) {
  const Hypothesis f = f_opt.value_or(cls.lex_min());
  if (f.size() != cls.domain().size())
    throw ValidationError("representation length does not match domain size");
  if (!cls.contains(f))
    throw ValidationError("representation must be a member of the class");

  auto [quotient, quotiented] = quotient_indistinguishable(cls);
  const std::size_t n = quotient.num_classes();

  // Disagreement sets on quotient classes, indexed by the original
  // hypothesis order so witnesses can be reported over the original domain.
  std::vector<HypSet> sets(n, make_set(cls.size()));
  for (std::size_t hi = 0; hi < cls.size(); ++hi) {
    const Hypothesis& h = cls.hypotheses()[hi];
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t rep = quotient.classes[c].front();
      if (h(rep) != f(rep)) set_bit(sets[c], hi);
    }
  }

  OrderRelation order = order_from_sets(sets, /*certificate_form=*/true);

  // The class has VC dimension <= 1 iff every disagreement set is a chain,
  // i.e. no hypothesis disagrees with f on two incomparable classes.
  for (std::size_t hi = 0; hi < cls.size(); ++hi) {
    std::vector<std::size_t> in_h;
    for (std::size_t c = 0; c < n; ++c)
      if (test_bit(sets[c], hi)) in_h.push_back(c);
    for (std::size_t i = 0; i < in_h.size(); ++i)
      for (std::size_t j = i + 1; j < in_h.size(); ++j) {
        const std::size_t a = in_h[i], b = in_h[j];
        if (order.comparable(a, b)) continue;

        // Incomparable classes with a common disagreeing hypothesis: the
        // pair is shattered. Recover the two mixed patterns from the
        // failed inclusions; f itself realizes the agreeing pattern.
        const std::size_t py = quotient.classes[a].front();
        const std::size_t pz = quotient.classes[b].front();
        std::size_t mixed_b = cls.size(), mixed_a = cls.size();
        for (std::size_t k = 0; k < cls.size(); ++k) {
          if (mixed_b == cls.size() && test_bit(sets[b], k) && !test_bit(sets[a], k))
            mixed_b = k;  // disagrees at z only
          if (mixed_a == cls.size() && test_bit(sets[a], k) && !test_bit(sets[b], k))
            mixed_a = k;  // disagrees at y only
        }
        if (mixed_a == cls.size() || mixed_b == cls.size())
          throw InternalError("incomparable classes without mixed patterns");

        ShatteredPairWitness witness;
        witness.y = py;
        witness.z = pz;
        const Hypothesis* pattern[2][2] = {};
        for (const Hypothesis* h2 :
             {&f, &cls.hypotheses()[hi], &cls.hypotheses()[mixed_a],
              &cls.hypotheses()[mixed_b]})
          pattern[(*h2)(py)][(*h2)(pz)] = h2;
        if (!pattern[0][0] || !pattern[1][0] || !pattern[0][1] || !pattern[1][1])
          throw InternalError("witness hypotheses do not realize four patterns");
        witness.h00 = *pattern[0][0];
        witness.h10 = *pattern[1][0];
        witness.h01 = *pattern[0][1];
        witness.h11 = *pattern[1][1];
        return witness;
      }
  }

  return TreeOrderCertificate{f, std::move(quotient), std::move(order)};
}

std::vector<std::size_t> parent_forest(const OrderRelation& order) {
  const std::size_t n = order.size();
  std::vector<std::size_t> parent(n, kNoParent);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> preds;
    for (std::size_t p = 0; p < n; ++p)
      if (p != c && order.holds(p, c)) preds.push_back(p);
    for (std::size_t p : preds) {
      bool maximal = true;
      for (std::size_t q : preds)
        if (q != p && !order.holds(q, p)) {
          maximal = false;
          break;
        }
      if (maximal) {
        parent[c] = p;
        break;
      }
    }
    if (!preds.empty() && parent[c] == kNoParent)
      throw PreconditionError("relation is not a tree order: no maximal predecessor");
  }
  return parent;
}

std::string class_label(const QuotientMap& quotient, const Domain& domain,
                        std::size_t class_id) {
  std::string label;
  for (std::size_t p : quotient.classes[class_id]) {
    if (!label.empty()) label.push_back('|');
    label += domain.name(p);
  }
  return label;
}

std::string tree_dot(const TreeOrderCertificate& cert, const Domain& domain) {
  const auto parent = parent_forest(cert.order);
  std::ostringstream out;
  out << "digraph tree_order {\n";
  for (std::size_t c = 0; c < cert.order.size(); ++c)
    out << "  \"" << class_label(cert.quotient, domain, c) << "\";\n";
  for (std::size_t c = 0; c < cert.order.size(); ++c)
    if (parent[c] != kNoParent)
      out << "  \"" << class_label(cert.quotient, domain, parent[c]) << "\" -> \""
          << class_label(cert.quotient, domain, c) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace vc1

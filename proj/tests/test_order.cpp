#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "vc1/order.hpp"
#include "vc1/rng.hpp"
#include "vc1/sweep.hpp"

using namespace vc1;
using vc1::testing::cc;

namespace {

// Expected relation as a list of strict pairs (x below y); reflexive pairs implied.
void check_relation(const OrderRelation& order,
                    const std::vector<std::pair<std::size_t, std::size_t>>& strict) {
  for (std::size_t x = 0; x < order.size(); ++x)
    for (std::size_t y = 0; y < order.size(); ++y) {
      const bool expected =
          x == y || std::find(strict.begin(), strict.end(),
                              std::make_pair(x, y)) != strict.end();
      CHECK(order.holds(x, y) == expected);
    }
}

// Pattern count of a hypothesis pair witness on its two points.
std::size_t distinct_patterns(const ShatteredPairWitness& w) {
  std::set<std::pair<Label, Label>> seen;
  for (const Hypothesis* h : {&w.h00, &w.h10, &w.h01, &w.h11})
    seen.insert({(*h)(w.y), (*h)(w.z)});
  return seen.size();
}

// Disagreement set of h with f, as quotient class indices.
std::vector<std::size_t> hf_classes(const Hypothesis& h, const TreeOrderCertificate& cert) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cert.quotient.num_classes(); ++c) {
    const std::size_t rep = cert.quotient.classes[c].front();
    if (h(rep) != cert.f(rep)) out.push_back(c);
  }
  return out;
}

void check_certificate_valid(const ConceptClass& cls, const TreeOrderCertificate& cert) {
  CHECK(!verify_partial_order(cert.order));
  CHECK(!verify_tree_order(cert.order));
  for (const auto& h : cls.hypotheses()) {
    const auto members = hf_classes(h, cert);
    CHECK(is_initial_segment(members, cert.order));
    // Every disagreement set is also a chain under the certificate order.
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        CHECK(cert.order.comparable(members[i], members[j]));
  }
}

}  // namespace

TEST_CASE("order relation basics") {
  OrderRelation order(3);
  CHECK(order.holds(1, 1));  // reflexive on construction
  CHECK(!order.holds(0, 1));
  order.set(0, 1);
  CHECK(order.holds(0, 1));
  CHECK(order.comparable(1, 0));
}

TEST_CASE("verify_partial_order") {
  CHECK(!verify_partial_order(OrderRelation(4)));  // discrete order

  OrderRelation full(2);
  full.set(0, 1);
  full.set(1, 0);
  const auto violation = verify_partial_order(full);
  REQUIRE(violation.has_value());
  CHECK(violation->axiom == OrderViolation::Axiom::antisymmetry);
  CHECK(violation->x == 0);
  CHECK(violation->y == 1);

  OrderRelation gap(3);  // 0<1, 1<2, missing 0<2
  gap.set(0, 1);
  gap.set(1, 2);
  const auto broken = verify_partial_order(gap);
  REQUIRE(broken.has_value());
  CHECK(broken->axiom == OrderViolation::Axiom::transitivity);

  OrderRelation bent(2);
  bent.set(0, 0, false);
  CHECK(verify_partial_order(bent)->axiom == OrderViolation::Axiom::reflexivity);
}

TEST_CASE("verify_tree_order") {
  OrderRelation chain(3);
  chain.set(0, 1);
  chain.set(0, 2);
  chain.set(1, 2);
  CHECK(!verify_tree_order(chain));

  OrderRelation branches(3);  // root 0 with leaves 1 and 2
  branches.set(0, 1);
  branches.set(0, 2);
  CHECK(!verify_tree_order(branches));

  OrderRelation vee(3);  // 0 and 1 both below 2
  vee.set(0, 2);
  vee.set(1, 2);
  const auto violation = verify_tree_order(vee);
  REQUIRE(violation.has_value());
  CHECK(violation->x == 2);
  CHECK(violation->y == 0);
  CHECK(violation->z == 1);
}

TEST_CASE("is_initial_segment") {
  OrderRelation chain(3);
  chain.set(0, 1);
  chain.set(0, 2);
  chain.set(1, 2);
  CHECK(is_initial_segment(std::vector<std::size_t>{}, chain));
  CHECK(is_initial_segment(std::vector<std::size_t>{0, 1, 2}, chain));
  CHECK(is_initial_segment(std::vector<std::size_t>{0, 1}, chain));
  CHECK(!is_initial_segment(std::vector<std::size_t>{1}, chain));
  CHECK_THROWS_AS(is_initial_segment(std::vector<std::size_t>{9}, chain),
                  ValidationError);
}

TEST_CASE("build_order on the chain class") {
  const auto cls = cc({"000", "100", "110", "111"});
  const auto order = build_order(cls, Hypothesis::zeros(3));
  check_relation(order, {{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("build_order on the branching class") {
  const auto cls = cc({"000", "100", "110", "101"});
  const auto order = build_order(cls, Hypothesis::zeros(3));
  check_relation(order, {{0, 1}, {0, 2}});
}

TEST_CASE("build_order preconditions") {
  const auto cls = cc({"000", "100", "110", "111"});
  CHECK_THROWS_AS(build_order(cls, Hypothesis::from_string("101")), ValidationError);
  CHECK_THROWS_AS(build_order(cls, Hypothesis::zeros(4)), ValidationError);
  // Duplicated point columns: not quotiented.
  CHECK_THROWS_AS(build_order(cc({"00", "11"}), Hypothesis::zeros(2)), ValidationError);
  // Single point, single hypothesis: the trivial reflexive order.
  const auto trivial = build_order(cc({"0"}), Hypothesis::zeros(1));
  CHECK(trivial.size() == 1);
  CHECK(trivial.holds(0, 0));
}

TEST_CASE("complementary columns break antisymmetry of the literal order only") {
  // Both hypotheses disagree with f on both points, so the literal relation
  // relates the points both ways; the certificate order breaks the tie.
  const auto cls = cc({"01", "10"});
  const auto f = cls.lex_min();

  const auto literal = build_order(cls, f);
  CHECK(literal.holds(0, 1));
  CHECK(literal.holds(1, 0));
  const auto violation = verify_partial_order(literal);
  REQUIRE(violation.has_value());
  CHECK(violation->axiom == OrderViolation::Axiom::antisymmetry);

  const auto cert_order = build_certificate_order(cls, f);
  CHECK(!verify_partial_order(cert_order));
  CHECK(cert_order.holds(0, 1));
  CHECK(!cert_order.holds(1, 0));

  CHECK(vc_dimension(cls) == 1);
  CHECK(is_tree_certificate(structure_certificate(cls)));
}

TEST_CASE("a point every hypothesis agrees on stays isolated, not a vacuous top") {
  // vc dimension 1, but the literal order makes p2 a top above the
  // incomparable p0, p1 and fails the down-set chain test there.
  const auto cls = cc({"000", "100", "010"});
  const auto f = cls.lex_min();

  const auto literal = build_order(cls, f);
  CHECK(literal.holds(0, 2));
  CHECK(literal.holds(1, 2));
  CHECK(verify_tree_order(literal).has_value());

  const auto cert_order = build_certificate_order(cls, f);
  CHECK(!cert_order.holds(0, 2));
  CHECK(!cert_order.holds(1, 2));
  CHECK(!verify_tree_order(cert_order));

  CHECK(vc_dimension(cls) == 1);
  const auto cert = structure_certificate(cls);
  REQUIRE(is_tree_certificate(cert));
  check_certificate_valid(cls, std::get<TreeOrderCertificate>(cert));
}

TEST_CASE("literal order is always reflexive and transitive; certificate order is a partial order") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_concept_class(n, [&](const ConceptClass& cls) {
      const auto [map, quotiented] = quotient_indistinguishable(cls);
      for (const auto& f : quotiented.hypotheses()) {
        const auto literal = build_order(quotiented, f);
        const auto violation = verify_partial_order(literal);
        if (violation) CHECK(violation->axiom == OrderViolation::Axiom::antisymmetry);
        CHECK(!verify_partial_order(build_certificate_order(quotiented, f)));
      }
    });
  }
}

TEST_CASE("structure_certificate examples") {
  const auto chain = structure_certificate(cc({"000", "100", "110", "111"}));
  REQUIRE(is_tree_certificate(chain));
  const auto& tree = std::get<TreeOrderCertificate>(chain);
  CHECK(tree.f == Hypothesis::zeros(3));
  check_relation(tree.order, {{0, 1}, {0, 2}, {1, 2}});

  const auto shattered = structure_certificate(cc({"00", "10", "01", "11"}));
  REQUIRE(!is_tree_certificate(shattered));
  const auto& witness = std::get<ShatteredPairWitness>(shattered);
  CHECK(witness.y == 0);
  CHECK(witness.z == 1);
  CHECK(witness.h00.to_string() == "00");
  CHECK(witness.h10.to_string() == "10");
  CHECK(witness.h01.to_string() == "01");
  CHECK(witness.h11.to_string() == "11");

  const auto degenerate = structure_certificate(cc({"0000"}));
  REQUIRE(is_tree_certificate(degenerate));
  CHECK(std::get<TreeOrderCertificate>(degenerate).order.size() == 1);
}

TEST_CASE("structure_certificate rejects a representation outside the class") {
  CHECK_THROWS_AS(
      structure_certificate(cc({"000", "100"}), Hypothesis::from_string("111")),
      ValidationError);
}

TEST_CASE("certificate iff dimension <= 1, exhaustively for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_concept_class(n, [&](const ConceptClass& cls) {
      const auto cert = structure_certificate(cls);
      CHECK(is_tree_certificate(cert) == (vc_dimension(cls) <= 1));
      if (const auto* tree = std::get_if<TreeOrderCertificate>(&cert)) {
        check_certificate_valid(cls, *tree);
      } else {
        const auto& w = std::get<ShatteredPairWitness>(cert);
        CHECK(distinct_patterns(w) == 4);
        for (const Hypothesis* h : {&w.h00, &w.h10, &w.h01, &w.h11})
          CHECK(cls.contains(*h));
      }
    });
  }
}

TEST_CASE("certificate iff dimension <= 1 on random classes over 6 points") {
  Rng rng(987654321);
  for (int iteration = 0; iteration < 300; ++iteration) {
    std::vector<Hypothesis> members;
    const std::size_t count = 1 + rng.below(10);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Label> labels(6);
      for (auto& b : labels) b = static_cast<Label>(rng.below(2));
      members.emplace_back(std::move(labels));
    }
    const ConceptClass cls(Domain::indexed(6), std::move(members));
    const auto cert = structure_certificate(cls);
    CHECK(is_tree_certificate(cert) == (vc_dimension(cls) <= 1));
    if (const auto* tree = std::get_if<TreeOrderCertificate>(&cert))
      check_certificate_valid(cls, *tree);
    else
      CHECK(distinct_patterns(std::get<ShatteredPairWitness>(cert)) == 4);
  }
}

TEST_CASE("principal down-sets of a random tree order have dimension <= 1") {
  Rng rng(1357);
  for (int iteration = 0; iteration < 200; ++iteration) {
    const std::size_t n = 2 + rng.below(6);
    // Random forest: each node's parent is an earlier node or none.
    std::vector<std::size_t> parent(n, kNoParent);
    for (std::size_t i = 1; i < n; ++i) {
      const std::size_t pick = rng.below(i + 1);
      parent[i] = pick == i ? kNoParent : pick;
    }
    // Members are indicators of I_x = ancestors(x) plus x, and the empty set.
    std::vector<Hypothesis> members{Hypothesis::zeros(n)};
    for (std::size_t x = 0; x < n; ++x) {
      if (rng.below(4) == 0) continue;  // leave out some segments
      std::vector<Label> labels(n, 0);
      for (std::size_t v = x; v != kNoParent; v = parent[v]) labels[v] = 1;
      members.emplace_back(std::move(labels));
    }
    const ConceptClass cls(Domain::indexed(n), std::move(members));
    CHECK(vc_dimension(cls) <= 1);
    CHECK(is_tree_certificate(structure_certificate(cls)));
  }
}

TEST_CASE("nested families: every disagreement set is down-closed under the literal order") {
  Rng rng(777);
  for (int iteration = 0; iteration < 100; ++iteration) {
    const std::size_t n = 2 + rng.below(6);
    // A chain by inclusion: prefixes of a random point order.
    std::vector<std::size_t> points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = i;
    rng.shuffle(points);
    std::vector<Hypothesis> members;
    std::vector<Label> labels(n, 0);
    members.emplace_back(Hypothesis(labels));
    for (std::size_t i = 0; i < n; ++i) {
      labels[points[i]] = 1;
      if (rng.below(3) != 0) members.emplace_back(Hypothesis(labels));
    }
    const ConceptClass cls(Domain::indexed(n), std::move(members));
    const auto [map, quotiented] = quotient_indistinguishable(cls);
    const Hypothesis f = quotiented.lex_min();  // the inclusion-minimal member
    const auto order = build_order(quotiented, f);
    for (const auto& h : quotiented.hypotheses()) {
      std::vector<std::size_t> hf;
      for (std::size_t x = 0; x < quotiented.domain().size(); ++x)
        if (h(x) != f(x)) hf.push_back(x);
      CHECK(is_initial_segment(hf, order));
    }
  }
}

TEST_CASE("parent forest and DOT rendering") {
  const auto chain_cert = std::get<TreeOrderCertificate>(
      structure_certificate(cc({"000", "100", "110", "111"})));
  CHECK(parent_forest(chain_cert.order) ==
        std::vector<std::size_t>{kNoParent, 0, 1});
  CHECK(tree_dot(chain_cert, Domain::indexed(3)) ==
        "digraph tree_order {\n"
        "  \"p0\";\n"
        "  \"p1\";\n"
        "  \"p2\";\n"
        "  \"p0\" -> \"p1\";\n"
        "  \"p1\" -> \"p2\";\n"
        "}\n");

  const auto branch_cert = std::get<TreeOrderCertificate>(
      structure_certificate(cc({"000", "100", "110", "101"})));
  CHECK(parent_forest(branch_cert.order) ==
        std::vector<std::size_t>{kNoParent, 0, 0});

  OrderRelation vee(3);
  vee.set(0, 2);
  vee.set(1, 2);
  CHECK_THROWS_AS(parent_forest(vee), PreconditionError);

  // Merged quotient classes render with joined labels.
  const auto merged = cc({"0000", "1001", "1101"});
  const auto cert = std::get<TreeOrderCertificate>(structure_certificate(merged));
  CHECK(class_label(cert.quotient, merged.domain(), 0) == "p0|p3");
  CHECK(tree_dot(cert, merged.domain()) ==
        "digraph tree_order {\n"
        "  \"p0|p3\";\n"
        "  \"p1\";\n"
        "  \"p2\";\n"
        "  \"p0|p3\" -> \"p1\";\n"
        "}\n");
}

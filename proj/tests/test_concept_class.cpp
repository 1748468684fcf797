#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "vc1/concept_class.hpp"
#include "vc1/rng.hpp"
#include "vc1/sweep.hpp"

using namespace vc1;
using vc1::testing::cc;
using vc1::testing::points_of_mask;

TEST_CASE("domain and hypothesis validation") {
  CHECK_THROWS_AS(Domain({}), ValidationError);
  CHECK_THROWS_AS(Domain({"a", "a"}), ValidationError);
  CHECK(Domain::indexed(3).name(2) == "p2");
  CHECK(Domain::indexed(2).index_of("p1") == 1);
  CHECK(!Domain::indexed(2).index_of("q7"));

  CHECK(Hypothesis::from_string("0101").to_string() == "0101");
  CHECK_THROWS_AS(Hypothesis::from_string("01x"), ValidationError);
  CHECK((Hypothesis::from_string("0110") ^ Hypothesis::from_string("1110")) ==
        Hypothesis::from_string("1000"));
  CHECK_THROWS_AS(Hypothesis::from_string("01") ^ Hypothesis::from_string("0"),
                  ValidationError);
}

TEST_CASE("concept class canonicalization") {
  const auto cls = cc({"110", "000", "110", "111"});
  CHECK(cls.size() == 3);  // duplicate removed
  CHECK(cls.lex_min().to_string() == "000");
  CHECK(cls.hypotheses()[1].to_string() == "110");
  CHECK(cls.contains(Hypothesis::from_string("111")));
  CHECK(!cls.contains(Hypothesis::from_string("101")));
  CHECK_THROWS_AS(cc({"01", "011"}), ValidationError);
  CHECK_THROWS_AS(ConceptClass(Domain::indexed(2), {}), ValidationError);
}

TEST_CASE("patterns") {
  const auto cls = cc({"000", "100", "110", "111"});
  const std::vector<std::size_t> a{0, 2};
  const auto pats = patterns(cls, a);
  CHECK(pats == std::set<std::vector<Label>>{{0, 0}, {1, 0}, {1, 1}});

  CHECK(patterns(cls, std::vector<std::size_t>{}) ==
        std::set<std::vector<Label>>{{}});

  std::vector<std::string> all8;
  for (const auto& h : all_hypotheses(3)) all8.push_back(h.to_string());
  const std::vector<std::size_t> whole{0, 1, 2};
  CHECK(patterns(cc(all8), whole).size() == 8);

  CHECK_THROWS_AS(patterns(cls, std::vector<std::size_t>{3}), ValidationError);
}

TEST_CASE("shatters") {
  CHECK(shatters(cc({"00", "10", "01", "11"}), std::vector<std::size_t>{0, 1}));
  CHECK(!shatters(cc({"000", "100", "110", "111"}), std::vector<std::size_t>{1, 2}));
  CHECK(shatters(cc({"0000"}), std::vector<std::size_t>{}));
}

TEST_CASE("vc dimension examples") {
  CHECK(vc_dimension(cc({"000", "100", "110", "111"})) == 1);
  std::vector<std::string> all8;
  for (const auto& h : all_hypotheses(3)) all8.push_back(h.to_string());
  CHECK(vc_dimension(cc(all8)) == 3);
  CHECK(vc_dimension(cc({"0000"})) == 0);

  CHECK(vc_dimension_witness(cc({"000", "100", "110", "111"})).witness ==
        std::vector<std::size_t>{0});
  CHECK(vc_dimension_witness(cc({"0000"})).witness.empty());
  CHECK(vc_dimension_witness(cc({"00", "10", "01", "11"})).witness ==
        std::vector<std::size_t>{0, 1});
}

TEST_CASE("shattering is monotone under subsets") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_concept_class(n, [&](const ConceptClass& cls) {
      for (std::size_t big = 0; big < (std::size_t{1} << n); ++big) {
        if (!shatters(cls, points_of_mask(big))) continue;
        for (std::size_t small = big;; small = (small - 1) & big) {
          CHECK(shatters(cls, points_of_mask(small)));
          if (small == 0) break;
        }
      }
    });
  }
}

TEST_CASE("f-representation") {
  const auto cls = cc({"000", "100", "110", "111"});
  const auto rep = f_representation(cls, Hypothesis::from_string("111"));
  CHECK(rep.hypotheses() == cc({"111", "011", "001", "000"}).hypotheses());

  CHECK(f_representation(cls, Hypothesis::zeros(3)).hypotheses() == cls.hypotheses());
  CHECK(f_representation(cls, Hypothesis::from_string("110"))
            .contains(Hypothesis::zeros(3)));
  CHECK_THROWS_AS(f_representation(cls, Hypothesis::zeros(4)), ValidationError);
}

TEST_CASE("dimension is preserved by every representation, exhaustively for n<=3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto fs = all_hypotheses(n);
    for_each_concept_class(n, [&](const ConceptClass& cls) {
      const std::size_t dim = vc_dimension(cls);
      for (const auto& f : fs) CHECK(vc_dimension(f_representation(cls, f)) == dim);
    });
  }
}

TEST_CASE("dimension preservation and involution on random larger classes") {
  Rng rng(20260810);
  for (int iteration = 0; iteration < 40; ++iteration) {
    const std::size_t n = 5 + rng.below(2);
    std::vector<Hypothesis> members;
    const std::size_t count = 2 + rng.below(12);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Label> labels(n);
      for (auto& b : labels) b = static_cast<Label>(rng.below(2));
      members.emplace_back(std::move(labels));
    }
    const ConceptClass cls(Domain::indexed(n), std::move(members));
    std::vector<Label> fl(n);
    for (auto& b : fl) b = static_cast<Label>(rng.below(2));
    const Hypothesis f(std::move(fl));

    const auto rep = f_representation(cls, f);
    CHECK(vc_dimension(rep) == vc_dimension(cls));
    CHECK(f_representation(rep, f).hypotheses() == cls.hypotheses());
  }
}

TEST_CASE("quotienting indistinguishable points") {
  // Identical columns merge.
  const auto merged = quotient_indistinguishable(cc({"00", "11"}));
  CHECK(merged.first.num_classes() == 1);
  CHECK(merged.first.classes[0] == std::vector<std::size_t>{0, 1});
  CHECK(merged.second.domain().size() == 1);
  CHECK(merged.second.size() == 2);

  // All columns distinct: identity.
  const auto identity = quotient_indistinguishable(cc({"000", "100", "110", "111"}));
  CHECK(identity.first.is_identity());
  CHECK(identity.first.num_classes() == 3);

  // A duplicated column pairs up.
  const auto pair = quotient_indistinguishable(cc({"0000", "1001", "1101"}));
  CHECK(pair.first.num_classes() == 3);
  CHECK(pair.first.classes[0] == std::vector<std::size_t>{0, 3});
  CHECK(pair.first.representative[3] == 0);
}

TEST_CASE("quotienting is idempotent and preserves dimension, n<=3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_concept_class(n, [&](const ConceptClass& cls) {
      const auto [map, quotiented] = quotient_indistinguishable(cls);
      CHECK(vc_dimension(quotiented) == vc_dimension(cls));
      const auto [again, twice] = quotient_indistinguishable(quotiented);
      CHECK(again.is_identity());
      CHECK(twice.size() == quotiented.size());
    });
  }
}

TEST_CASE("sauer bound at dimension <= 1, n<=3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_concept_class(n, [&](const ConceptClass& cls) {
      if (vc_dimension(cls) > 1) return;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        const auto a = points_of_mask(mask);
        CHECK(patterns(cls, a).size() <= a.size() + 1);
      }
      CHECK(cls.size() <= n + 1);
      const auto [map, quotiented] = quotient_indistinguishable(cls);
      CHECK(quotiented.size() <= map.num_classes() + 1);
    });
  }
}

TEST_CASE("empirical loss") {
  const auto h110 = Hypothesis::from_string("110");
  CHECK(empirical_loss(h110, {{0, 1}, {1, 1}, {2, 0}}) == 0);
  CHECK(empirical_loss(Hypothesis::from_string("000"), {{0, 1}, {1, 1}}) == 1);
  CHECK(empirical_loss(Hypothesis::from_string("100"), {{0, 1}, {1, 1}, {2, 0}}) ==
        make_rational(1, 3));
  CHECK_THROWS_AS(empirical_loss(h110, {}), ValidationError);
}

TEST_CASE("true error under the uniform marginal") {
  const auto h = Hypothesis::from_string("1111000000");
  CHECK(true_error_uniform(h, h) == 0);
  CHECK(true_error_uniform(Hypothesis::zeros(7), Hypothesis::ones(7)) == 1);
  CHECK(true_error_uniform(Hypothesis::from_string("1110000000"), h) ==
        make_rational(1, 10));
  CHECK(true_error_uniform(Hypothesis::from_string("0001111111"), h) == 1);
  CHECK_THROWS_AS(true_error_uniform(h, Hypothesis::zeros(3)), ValidationError);
}

TEST_CASE("find_consistent") {
  const auto cls = cc({"000", "100", "110", "111"});
  const auto hit = find_consistent(cls, {{0, 1}, {2, 0}});
  REQUIRE(hit.has_value());
  CHECK((*hit)(0) == 1);
  CHECK((*hit)(2) == 0);
  CHECK(!find_consistent(cls, {{0, 0}, {1, 1}}));
  CHECK_THROWS_AS(find_consistent(cls, {{5, 1}}), ValidationError);
}

#pragma once

// Exhaustive enumeration of concept classes over small domains, shared by
// audits and tests. A domain of n points has 2^n labelings and therefore
// 2^(2^n) - 1 nonempty classes; intended for n <= 4.

#include <utility>
#include <vector>

#include "vc1/concept_class.hpp"

namespace vc1 {

// All 2^n hypotheses over n points, in lexicographic order.
inline std::vector<Hypothesis> all_hypotheses(std::size_t n) {
  std::vector<Hypothesis> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Label> labels(n);
    for (std::size_t i = 0; i < n; ++i)
      labels[i] = static_cast<Label>((mask >> (n - 1 - i)) & 1);
    out.emplace_back(std::move(labels));
  }
  return out;
}

// Calls fn with every nonempty concept class over Domain::indexed(n).
template <typename Fn>
void for_each_concept_class(std::size_t n, Fn&& fn) {
  const auto hypotheses = all_hypotheses(n);
  const Domain domain = Domain::indexed(n);
  const std::size_t total = std::size_t{1} << hypotheses.size();
  for (std::size_t mask = 1; mask < total; ++mask) {
    std::vector<Hypothesis> members;
    for (std::size_t i = 0; i < hypotheses.size(); ++i)
      if ((mask >> i) & 1) members.push_back(hypotheses[i]);
    fn(ConceptClass(domain, std::move(members)));
  }
}

}  // namespace vc1

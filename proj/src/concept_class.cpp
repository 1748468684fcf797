#include "vc1/concept_class.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace vc1 {

Domain::Domain(std::vector<std::string> points) : points_(std::move(points)) {
  if (points_.empty()) throw ValidationError("domain must contain at least one point");
  std::unordered_set<std::string_view> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second)
      throw ValidationError("duplicate point identifier: " + p);
  }
}

Domain Domain::indexed(std::size_t n) {
  std::vector<std::string> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back("p" + std::to_string(i));
  return Domain(std::move(pts));
}

std::optional<std::size_t> Domain::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  return std::nullopt;
}

Hypothesis::Hypothesis(std::vector<Label> labels) : labels_(std::move(labels)) {
  for (Label b : labels_)
    if (b > 1) throw ValidationError("hypothesis labels must be 0 or 1");
}

Hypothesis Hypothesis::from_string(std::string_view bits) {
  std::vector<Label> labels;
  labels.reserve(bits.size());
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw ValidationError(std::string("invalid label character '") + c + "'");
    labels.push_back(static_cast<Label>(c - '0'));
  }
  return Hypothesis(std::move(labels));
}

Hypothesis Hypothesis::zeros(std::size_t n) {
  return Hypothesis(std::vector<Label>(n, 0));
}

Hypothesis Hypothesis::ones(std::size_t n) {
  return Hypothesis(std::vector<Label>(n, 1));
}

std::string Hypothesis::to_string() const {
  std::string s;
  s.reserve(labels_.size());
  for (Label b : labels_) s.push_back(static_cast<char>('0' + b));
  return s;
}

Hypothesis Hypothesis::operator^(const Hypothesis& other) const {
  if (size() != other.size())
    throw ValidationError("hypothesis length mismatch in XOR");
  std::vector<Label> out(size());
  for (std::size_t i = 0; i < size(); ++i)
    out[i] = static_cast<Label>(labels_[i] ^ other.labels_[i]);
  return Hypothesis(std::move(out));
}

ConceptClass::ConceptClass(Domain domain, std::vector<Hypothesis> hypotheses)
    : domain_(std::move(domain)), hypotheses_(std::move(hypotheses)) {
  if (hypotheses_.empty())
    throw ValidationError("concept class must contain at least one hypothesis");
  for (const auto& h : hypotheses_)
    if (h.size() != domain_.size())
      throw ValidationError("hypothesis length " + std::to_string(h.size()) +
                            " does not match domain size " +
                            std::to_string(domain_.size()));
  std::sort(hypotheses_.begin(), hypotheses_.end());
  hypotheses_.erase(std::unique(hypotheses_.begin(), hypotheses_.end()),
                    hypotheses_.end());
}

bool ConceptClass::contains(const Hypothesis& h) const {
  return std::binary_search(hypotheses_.begin(), hypotheses_.end(), h);
}

bool QuotientMap::is_identity() const {
  for (std::size_t i = 0; i < representative.size(); ++i)
    if (representative[i] != i) return false;
  return true;
}

namespace {

std::vector<std::size_t> sorted_unique_points(const ConceptClass& cls,
                                              std::span<const std::size_t> points) {
  std::vector<std::size_t> a(points.begin(), points.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  if (!a.empty() && a.back() >= cls.domain().size())
    throw ValidationError("point index " + std::to_string(a.back()) +
                          " out of range for domain of size " +
                          std::to_string(cls.domain().size()));
  return a;
}

}  // namespace

std::set<std::vector<Label>> patterns(const ConceptClass& cls,
                                      std::span<const std::size_t> points) {
  const auto a = sorted_unique_points(cls, points);
  std::set<std::vector<Label>> out;
  for (const auto& h : cls.hypotheses()) {
    std::vector<Label> restriction;
    restriction.reserve(a.size());
    for (std::size_t p : a) restriction.push_back(h(p));
    out.insert(std::move(restriction));
  }
  return out;
}

bool shatters(const ConceptClass& cls, std::span<const std::size_t> points) {
  const auto a = sorted_unique_points(cls, points);
  if (a.size() >= 64) return false;  // would need 2^|A| hypotheses
  const std::size_t want = std::size_t{1} << a.size();
  if (cls.size() < want) return false;
  std::vector<bool> seen(want, false);
  std::size_t distinct = 0;
  for (const auto& h : cls.hypotheses()) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      code |= static_cast<std::size_t>(h(a[i])) << i;
    if (!seen[code]) {
      seen[code] = true;
      if (++distinct == want) return true;
    }
  }
  return false;
}

namespace {

// Visits k-subsets of [0,n) in lexicographic order until the callback
// returns true; reports whether any call did.
template <typename Fn>
bool any_combination(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<std::size_t> comb(k);
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  if (k > n) return false;
  while (true) {
    if (fn(comb)) return true;
    // advance
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (comb[i] + (k - i) < n) {
        ++comb[i];
        for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return false;
    }
    if (k == 0) return false;
  }
}

std::size_t floor_log2(std::size_t v) {
  std::size_t r = 0;
  while (v > 1) {
    v >>= 1;
    ++r;
  }
  return r;
}

}  // namespace

VcWitness vc_dimension_witness(const ConceptClass& cls) {
  const std::size_t n = cls.domain().size();
  const std::size_t cap = std::min(n, floor_log2(cls.size()));
  VcWitness result;  // the empty set is always shattered
  for (std::size_t k = 1; k <= cap; ++k) {
    std::vector<std::size_t> found;
    const bool any = any_combination(n, k, [&](const std::vector<std::size_t>& a) {
      if (shatters(cls, a)) {
        found = a;
        return true;
      }
      return false;
    });
    if (!any) break;  // no shattered set of size k, none larger either
    result.dimension = k;
    result.witness = std::move(found);
  }
  return result;
}

std::size_t vc_dimension(const ConceptClass& cls) {
  return vc_dimension_witness(cls).dimension;
}

ConceptClass f_representation(const ConceptClass& cls, const Hypothesis& f) {
  if (f.size() != cls.domain().size())
    throw ValidationError("representation length does not match domain size");
  std::vector<Hypothesis> out;
  out.reserve(cls.size());
  for (const auto& h : cls.hypotheses()) out.push_back(h ^ f);
  ConceptClass result(cls.domain(), std::move(out));
  if (result.size() != cls.size())
    throw InternalError("XOR with a fixed labeling collapsed distinct hypotheses");
  return result;
}

std::pair<QuotientMap, ConceptClass> quotient_indistinguishable(const ConceptClass& cls) {
  const std::size_t n = cls.domain().size();
  QuotientMap map;
  map.representative.assign(n, 0);
  map.class_index.assign(n, 0);

  // Group points by their label column across all hypotheses. Scanning points
  // in ascending order makes class ids ascend with their minimum member.
  std::unordered_map<std::string, std::size_t> column_to_class;
  for (std::size_t x = 0; x < n; ++x) {
    std::string col;
    col.reserve(cls.size());
    for (const auto& h : cls.hypotheses()) col.push_back(static_cast<char>('0' + h(x)));
    auto [it, inserted] = column_to_class.try_emplace(std::move(col), map.classes.size());
    if (inserted)
      map.classes.push_back({x});
    else
      map.classes[it->second].push_back(x);
    map.class_index[x] = it->second;
    map.representative[x] = map.classes[it->second].front();
  }

  std::vector<std::string> rep_names;
  rep_names.reserve(map.classes.size());
  for (const auto& c : map.classes) rep_names.push_back(cls.domain().name(c.front()));

  std::vector<Hypothesis> restricted;
  restricted.reserve(cls.size());
  for (const auto& h : cls.hypotheses()) {
    std::vector<Label> labels;
    labels.reserve(map.classes.size());
    for (const auto& c : map.classes) labels.push_back(h(c.front()));
    restricted.emplace_back(std::move(labels));
  }

  ConceptClass quotiented(Domain(std::move(rep_names)), std::move(restricted));
  if (quotiented.size() != cls.size())
    throw InternalError("quotienting collapsed distinct hypotheses");
  return {std::move(map), std::move(quotiented)};
}

Rational empirical_loss(const Hypothesis& h, const LabeledSample& sample) {
  if (sample.empty()) throw ValidationError("empirical loss of an empty sample");
  long disagreements = 0;
  for (const auto& [point, label] : sample) {
    if (point >= h.size())
      throw ValidationError("sample point index out of range");
    if (h(point) != label) ++disagreements;
  }
  return make_rational(disagreements, static_cast<long>(sample.size()));
}

Rational true_error_uniform(const Hypothesis& h, const Hypothesis& target) {
  if (h.size() != target.size())
    throw ValidationError("hypothesis length mismatch in true error");
  long hamming = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h(i) != target(i)) ++hamming;
  return make_rational(hamming, static_cast<long>(h.size()));
}

std::optional<Hypothesis> find_consistent(const ConceptClass& cls,
                                          const LabeledSample& sample) {
  validate_sample(cls, sample);
  for (const auto& h : cls.hypotheses()) {
    bool ok = true;
    for (const auto& [point, label] : sample) {
      if (h(point) != label) {
        ok = false;
        break;
      }
    }
    if (ok) return h;
  }
  return std::nullopt;
}

void validate_sample(const ConceptClass& cls, const LabeledSample& sample) {
  for (const auto& [point, label] : sample) {
    if (point >= cls.domain().size())
      throw ValidationError("sample point index " + std::to_string(point) +
                            " out of range");
    if (label > 1) throw ValidationError("sample label must be 0 or 1");
  }
}

}  // namespace vc1

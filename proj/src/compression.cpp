#include "vc1/compression.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vc1/rng.hpp"

namespace vc1 {

SchemeContext make_scheme_context(const ConceptClass& cls,
                                  std::optional<Hypothesis> f) {
  StructureCertificate cert = structure_certificate(cls, std::move(f));
  if (auto* witness = std::get_if<ShatteredPairWitness>(&cert)) {
    throw PreconditionError("class shatters pair (" + cls.domain().name(witness->y) +
                            "," + cls.domain().name(witness->z) +
                            "); no size-1 scheme exists");
  }
  return SchemeContext{cls, std::get<TreeOrderCertificate>(std::move(cert))};
}

namespace {

std::string describe_unrealizable(const SchemeContext& ctx, const LabeledSample& sample) {
  // Point at the closest member and one pair it gets wrong.
  const Hypothesis* best = nullptr;
  Rational best_loss;
  for (const auto& h : ctx.cls.hypotheses()) {
    const Rational loss = empirical_loss(h, sample);
    if (!best || loss < best_loss) {
      best = &h;
      best_loss = loss;
    }
  }
  std::ostringstream out;
  out << "sample is not realizable by any member";
  if (best) {
    for (const auto& [point, label] : sample)
      if ((*best)(point) != label) {
        out << "; closest hypothesis " << best->to_string() << " violates "
            << ctx.cls.domain().name(point) << "=" << int(label);
        break;
      }
  }
  return out.str();
}

}  // namespace

CompressedSample compress(const LabeledSample& sample, const SchemeContext& ctx) {
  validate_sample(ctx.cls, sample);
  if (sample.empty()) return {};
  if (!find_consistent(ctx.cls, sample))
    throw PreconditionError(describe_unrealizable(ctx, sample));

  const TreeOrderCertificate& cert = ctx.certificate;

  // Quotient class -> minimum sample point index disagreeing with f there.
  std::map<std::size_t, std::size_t> disagreeing;
  for (const auto& [point, label] : sample) {
    if (label == cert.f(point)) continue;
    const std::size_t cls_id = cert.quotient.class_index[point];
    auto [it, inserted] = disagreeing.try_emplace(cls_id, point);
    if (!inserted) it->second = std::min(it->second, point);
  }
  if (disagreeing.empty()) return {};

  std::size_t max_class = disagreeing.begin()->first;
  for (const auto& [cls_id, point] : disagreeing) {
    if (!cert.order.comparable(cls_id, max_class))
      throw InternalError("disagreeing sample points are not a chain");
    if (cert.order.holds(max_class, cls_id)) max_class = cls_id;
  }
  // A maximum, not merely maximal: every disagreeing class must sit below it.
  for (const auto& [cls_id, point] : disagreeing)
    if (!cert.order.holds(cls_id, max_class))
      throw InternalError("disagreeing sample points are not a chain");

  return CompressedSample{disagreeing.at(max_class)};
}

Hypothesis reconstruct(const CompressedSample& message, const SchemeContext& ctx) {
  const TreeOrderCertificate& cert = ctx.certificate;
  if (message.empty()) return cert.f;

  const std::size_t x = *message.point;
  if (x >= ctx.cls.domain().size())
    throw ValidationError("compressed point index out of range");
  const std::size_t target = cert.quotient.class_index[x];

  std::vector<Label> labels(ctx.cls.domain().size());
  for (std::size_t p = 0; p < labels.size(); ++p) {
    const bool in_down_set = cert.order.holds(cert.quotient.class_index[p], target);
    labels[p] = static_cast<Label>(cert.f(p) ^ (in_down_set ? 1 : 0));
  }
  return Hypothesis(std::move(labels));
}

namespace {

template <typename Fn>
void for_each_subset_up_to(std::size_t n, std::size_t max_size, Fn&& fn) {
  std::vector<std::size_t> subset;
  // Ascending sizes, lexicographic within a size.
  for (std::size_t k = 1; k <= std::min(n, max_size); ++k) {
    std::vector<std::size_t> comb(k);
    for (std::size_t i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      fn(comb);
      std::size_t i = k;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (comb[i] + (k - i) < n) {
          ++comb[i];
          for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

}  // namespace

SchemeVerification verify_scheme(const ConceptClass& cls, std::size_t up_to_m) {
  const SchemeContext ctx = make_scheme_context(cls);
  SchemeVerification report;

  auto fail = [&](const std::string& what) {
    if (report.passed) {
      report.passed = false;
      report.first_failure = what;
    }
  };

  // The empty sample compresses to the empty message and reconstructs f.
  {
    const CompressedSample c = compress({}, ctx);
    ++report.sample_sets_checked;
    if (!c.empty() || reconstruct(c, ctx) != ctx.certificate.f)
      fail("empty sample did not reconstruct the representation");
  }

  Rng rng(0x5eed5eed);
  for (std::size_t hi = 0; hi < cls.size() && report.passed; ++hi) {
    const Hypothesis& h = cls.hypotheses()[hi];
    for_each_subset_up_to(cls.domain().size(), up_to_m,
                          [&](const std::vector<std::size_t>& points) {
      if (!report.passed) return;
      LabeledSample sample;
      sample.reserve(points.size());
      for (std::size_t p : points) sample.push_back({p, h(p)});

      const CompressedSample message = compress(sample, ctx);
      const Hypothesis rebuilt = reconstruct(message, ctx);
      ++report.sample_sets_checked;
      for (const auto& [point, label] : sample) {
        ++report.label_checks;
        if (rebuilt(point) != label) {
          std::ostringstream out;
          out << "h=" << h.to_string() << " sample point "
              << cls.domain().name(point) << ": reconstructed "
              << int(rebuilt(point)) << ", expected " << int(label);
          fail(out.str());
          return;
        }
      }
      // Compression must not depend on sample order.
      LabeledSample shuffled = sample;
      rng.shuffle(shuffled);
      const CompressedSample again = compress(shuffled, ctx);
      if (again.point != message.point)
        fail("compression depends on sample order for h=" + h.to_string());
    });
  }
  return report;
}

}  // namespace vc1

// Command-line front end: reads concept-class files, runs the dimension,
// structure, compression and ERM analyses, and emits text or JSON reports.
//
// Exit codes: 0 success, 2 parse/validation error, 3 precondition failure
// (e.g. a shattered pair where dimension <= 1 is required), 4 internal
// invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vc1/class_file.hpp"
#include "vc1/compression.hpp"
#include "vc1/concept_class.hpp"
#include "vc1/erm.hpp"
#include "vc1/order.hpp"
#include "vc1/sweep.hpp"
#include "vc1/version.hpp"

namespace {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vc1::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string base_name(std::string path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string command_echo(int argc, char** argv) {
  std::string out = base_name(argv[0]);
  for (int i = 1; i < argc; ++i) {
    out.push_back(' ');
    const std::string arg = argv[i];
    if (arg.find_first_of(" \t\"") != std::string::npos) {
      out.push_back('"');
      for (char c : arg) {
        if (c == '"') out.push_back('\\');
        out.push_back(c);
      }
      out.push_back('"');
    } else {
      out += arg;
    }
  }
  return out;
}

// One report per invocation: a few header lines for humans, or a single
// JSON document when requested. Deterministic for fixed inputs and seeds.
struct Output {
  std::string command;
  bool as_json = false;
  std::optional<std::string> input_path;
  std::optional<std::string> input_digest;
  std::vector<std::string> lines;
  json body = json::object();

  int emit(int exit_code) const {
    if (as_json) {
      json doc;
      doc["version"] = vc1::kVersion;
      doc["command"] = command;
      if (input_path) doc["input"] = {{"path", *input_path}, {"fnv1a64", *input_digest}};
      doc["result"] = body;
      doc["exit"] = exit_code;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "# vc1 " << vc1::kVersion << "\n";
      std::cout << "# command: " << command << "\n";
      if (input_path)
        std::cout << "# input: " << *input_path << " fnv1a64=" << *input_digest << "\n";
      for (const auto& line : lines) std::cout << line << "\n";
    }
    return exit_code;
  }
};

vc1::ConceptClass load_class(const std::string& path, Output& out,
                             vc1::ClassFile* raw = nullptr) {
  const std::string text = read_file(path);
  out.input_path = path;
  out.input_digest = hex64(fnv1a64(text));
  vc1::ClassFile file = vc1::parse_class_file(text);
  if (raw) *raw = file;
  return vc1::to_concept_class(file);
}

std::optional<vc1::Hypothesis> resolve_f(const std::string& spec,
                                         const vc1::ClassFile& file) {
  if (spec == "lex-min") return std::nullopt;
  std::size_t pos = 0;
  unsigned long index = 0;
  try {
    index = std::stoul(spec, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != spec.size())
    throw vc1::ValidationError("--f must be a hypothesis index or \"lex-min\"");
  if (index >= file.hypotheses.size())
    throw vc1::ValidationError("--f index " + spec + " out of range; file lists " +
                               std::to_string(file.hypotheses.size()) + " hypotheses");
  return vc1::Hypothesis::from_string(file.hypotheses[index]);
}

vc1::LabeledSample parse_sample(const std::string& spec, const vc1::Domain& domain) {
  vc1::LabeledSample sample;
  std::istringstream in(spec);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 2 != token.size())
      throw vc1::ValidationError("bad sample token \"" + token +
                                 "\"; expected name=0 or name=1");
    const std::string name = token.substr(0, eq);
    const char bit = token[eq + 1];
    if (bit != '0' && bit != '1')
      throw vc1::ValidationError("bad sample label in \"" + token + "\"");
    const auto index = domain.index_of(name);
    if (!index)
      throw vc1::ValidationError("unknown point \"" + name + "\" in sample");
    sample.push_back({*index, static_cast<vc1::Label>(bit - '0')});
  }
  if (sample.empty()) throw vc1::ValidationError("sample is empty");
  return sample;
}

std::string format_approx(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ",";
    out += n;
  }
  return out;
}

int run_vcdim(const std::string& path, std::size_t max_n, std::size_t max_h,
              Output& out) {
  const vc1::ConceptClass cls = load_class(path, out);
  if (cls.domain().size() > max_n)
    throw vc1::ValidationError("domain size " + std::to_string(cls.domain().size()) +
                               " exceeds the exact-search cap " + std::to_string(max_n) +
                               " (raise with --max-n); refusing to approximate");
  if (cls.size() > max_h)
    throw vc1::ValidationError("class size " + std::to_string(cls.size()) +
                               " exceeds the exact-search cap " + std::to_string(max_h) +
                               " (raise with --max-h); refusing to approximate");
  const vc1::VcWitness vc = vc1::vc_dimension_witness(cls);
  std::vector<std::string> names;
  for (std::size_t p : vc.witness) names.push_back(cls.domain().name(p));
  out.lines.push_back("vcdim = " + std::to_string(vc.dimension) + ", witness {" +
                      join_names(names) + "}");
  out.body["vcdim"] = vc.dimension;
  out.body["witness"] = names;
  return out.emit(0);
}

int run_structure(const std::string& path, const std::string& f_spec,
                  const std::string& dot_path, Output& out) {
  vc1::ClassFile file;
  const vc1::ConceptClass cls = load_class(path, out, &file);
  const auto f = resolve_f(f_spec, file);
  const vc1::StructureCertificate cert = vc1::structure_certificate(cls, f);

  if (const auto* witness = std::get_if<vc1::ShatteredPairWitness>(&cert)) {
    const std::string py = cls.domain().name(witness->y);
    const std::string pz = cls.domain().name(witness->z);
    out.lines.push_back("NOT VCdim <= 1: shattered pair (" + py + "," + pz + ")");
    out.lines.push_back("h00 = " + witness->h00.to_string());
    out.lines.push_back("h10 = " + witness->h10.to_string());
    out.lines.push_back("h01 = " + witness->h01.to_string());
    out.lines.push_back("h11 = " + witness->h11.to_string());
    out.body["kind"] = "shattered";
    out.body["pair"] = {py, pz};
    out.body["patterns"] = {{"h00", witness->h00.to_string()},
                            {"h10", witness->h10.to_string()},
                            {"h01", witness->h01.to_string()},
                            {"h11", witness->h11.to_string()}};
    return out.emit(3);
  }

  const auto& tree = std::get<vc1::TreeOrderCertificate>(cert);
  std::string classes_line = "classes:";
  json class_names = json::array();
  for (std::size_t c = 0; c < tree.quotient.num_classes(); ++c) {
    const std::string label = vc1::class_label(tree.quotient, cls.domain(), c);
    classes_line += " {" + label + "}";
    class_names.push_back(label);
  }
  out.lines.push_back("vcdim <= 1: tree-order certificate");
  out.lines.push_back(classes_line);
  out.lines.push_back("f = " + tree.f.to_string());

  const auto parent = vc1::parent_forest(tree.order);
  json roots = json::array(), edges = json::array();
  for (std::size_t c = 0; c < parent.size(); ++c)
    if (parent[c] == vc1::kNoParent) {
      const std::string label = vc1::class_label(tree.quotient, cls.domain(), c);
      out.lines.push_back("root " + label);
      roots.push_back(label);
    }
  for (std::size_t c = 0; c < parent.size(); ++c)
    if (parent[c] != vc1::kNoParent) {
      const std::string from = vc1::class_label(tree.quotient, cls.domain(), parent[c]);
      const std::string to = vc1::class_label(tree.quotient, cls.domain(), c);
      out.lines.push_back(from + " -> " + to);
      edges.push_back({from, to});
    }

  if (!dot_path.empty()) {
    std::ofstream dot(dot_path, std::ios::binary);
    if (!dot) throw vc1::ValidationError("cannot write DOT file: " + dot_path);
    dot << vc1::tree_dot(tree, cls.domain());
  }

  out.body["kind"] = "tree";
  out.body["classes"] = class_names;
  out.body["f"] = tree.f.to_string();
  out.body["roots"] = roots;
  out.body["edges"] = edges;
  return out.emit(0);
}

int run_compress(const std::string& path, const std::string& sample_spec,
                 const std::string& f_spec, Output& out) {
  vc1::ClassFile file;
  const vc1::ConceptClass cls = load_class(path, out, &file);
  const vc1::SchemeContext ctx = vc1::make_scheme_context(cls, resolve_f(f_spec, file));
  const vc1::LabeledSample sample = parse_sample(sample_spec, cls.domain());
  const vc1::CompressedSample message = vc1::compress(sample, ctx);
  if (message.empty()) {
    out.lines.push_back("EMPTY");
    out.body["compressed"] = nullptr;
  } else {
    out.lines.push_back(cls.domain().name(*message.point));
    out.body["compressed"] = cls.domain().name(*message.point);
  }
  return out.emit(0);
}

int run_reconstruct(const std::string& path, const std::string& point_spec,
                    const std::string& f_spec, Output& out) {
  vc1::ClassFile file;
  const vc1::ConceptClass cls = load_class(path, out, &file);
  const vc1::SchemeContext ctx = vc1::make_scheme_context(cls, resolve_f(f_spec, file));
  vc1::CompressedSample message;
  if (point_spec != "EMPTY") {
    const auto index = cls.domain().index_of(point_spec);
    if (!index)
      throw vc1::ValidationError("unknown point \"" + point_spec + "\"");
    message.point = *index;
  }
  const vc1::Hypothesis rebuilt = vc1::reconstruct(message, ctx);
  out.lines.push_back(rebuilt.to_string());
  out.body["hypothesis"] = rebuilt.to_string();
  return out.emit(0);
}

int run_verify_file(const std::string& path, std::optional<std::size_t> max_m,
                    Output& out) {
  const vc1::ConceptClass cls = load_class(path, out);
  const std::size_t m = max_m.value_or(cls.domain().size());
  vc1::SchemeVerification report;
  try {
    report = vc1::verify_scheme(cls, m);
  } catch (const vc1::PreconditionError& e) {
    out.lines.push_back(std::string("FAIL precondition: ") + e.what());
    out.body["passed"] = false;
    out.body["precondition"] = e.what();
    return out.emit(3);
  }
  std::ostringstream line;
  line << (report.passed ? "PASS" : "FAIL") << ": " << report.sample_sets_checked
       << " sample-sets checked, " << (report.passed ? 0 : 1) << " failures";
  out.lines.push_back(line.str());
  if (!report.passed) out.lines.push_back("first failure: " + report.first_failure);
  out.body["passed"] = report.passed;
  out.body["sample_sets_checked"] = report.sample_sets_checked;
  out.body["label_checks"] = report.label_checks;
  if (!report.passed) out.body["first_failure"] = report.first_failure;
  return out.emit(report.passed ? 0 : 4);
}

int run_verify_sweep(std::size_t sweep_n, Output& out) {
  std::size_t total = 0, certified = 0, failures = 0;
  std::string first_failure;
  for (std::size_t n = 1; n <= sweep_n; ++n) {
    vc1::for_each_concept_class(n, [&](const vc1::ConceptClass& cls) {
      ++total;
      try {
        const auto report = vc1::verify_scheme(cls, n);
        ++certified;
        if (!report.passed) {
          ++failures;
          if (first_failure.empty()) first_failure = report.first_failure;
        }
      } catch (const vc1::PreconditionError&) {
        // dimension >= 2; no scheme expected
      }
    });
  }
  std::ostringstream line;
  line << (failures == 0 ? "PASS" : "FAIL") << ": swept " << total
       << " classes on domains of size <= " << sweep_n << "; " << certified
       << " admit a size-1 scheme; " << failures << " failures";
  out.lines.push_back(line.str());
  if (!first_failure.empty()) out.lines.push_back("first failure: " + first_failure);
  out.body["classes_swept"] = total;
  out.body["certified"] = certified;
  out.body["failures"] = failures;
  out.body["passed"] = failures == 0;
  return out.emit(failures == 0 ? 0 : 4);
}

vc1::OrdinalClassConfig load_pi(const std::string& spec, std::size_t n) {
  if (spec == "identity") return vc1::OrdinalClassConfig::identity(n);
  const std::string text = read_file(spec);
  std::istringstream in(text);
  std::vector<std::size_t> ranks;
  std::size_t value = 0;
  while (in >> value) ranks.push_back(value);
  if (ranks.size() != n)
    throw vc1::ValidationError("permutation file lists " +
                               std::to_string(ranks.size()) + " ranks, expected " +
                               std::to_string(n));
  return vc1::OrdinalClassConfig::from_ranks(std::move(ranks));
}

int run_erm(std::size_t n, std::size_t m, std::size_t trials, std::uint64_t seed,
            const std::string& pi_spec, bool open_segment,
            const std::string& m_range, Output& out) {
  const auto cfg = load_pi(pi_spec, n);
  const auto convention =
      open_segment ? vc1::SegmentConvention::open : vc1::SegmentConvention::closed;

  // The closed-segment expectation has the exact summation formula; the open
  // variant mislabels the pivot itself and shifts every trial by exactly 1/n.
  vc1::Rational exact = vc1::exact_expected_error(n, m);
  if (open_segment) exact += vc1::make_rational(1, static_cast<long>(n));

  const auto mc = vc1::monte_carlo_error(cfg, m, trials, seed, convention);
  const auto fubini = vc1::fubini_check(cfg);

  out.lines.push_back("N = " + std::to_string(n) + ", m = " + std::to_string(m) +
                      ", convention = " + (open_segment ? "open" : "closed"));
  out.lines.push_back("exact expected error = " + vc1::to_string(exact) + " (~" +
                      format_approx(vc1::to_double(exact)) + ")");
  out.lines.push_back("monte carlo: trials = " + std::to_string(mc.trials) +
                      ", seed = " + std::to_string(mc.seed) + ", rng = " + mc.generator);
  out.lines.push_back("monte carlo mean = " + format_approx(mc.mean) + " +/- " +
                      format_approx(mc.half_width) + " (3 std err)");

  json range_rows = json::array();
  if (!m_range.empty()) {
    const auto colon = m_range.find(':');
    if (colon == std::string::npos)
      throw vc1::ValidationError("--m-range expects A:B");
    std::size_t lo = 0, hi = 0;
    try {
      lo = std::stoul(m_range.substr(0, colon));
      hi = std::stoul(m_range.substr(colon + 1));
    } catch (const std::exception&) {
      throw vc1::ValidationError("--m-range expects numeric A:B");
    }
    if (lo == 0 || hi < lo) throw vc1::ValidationError("--m-range expects 1 <= A <= B");
    out.lines.push_back("exact error by sample size:");
    for (std::size_t mm = lo; mm <= hi; ++mm) {
      vc1::Rational value = vc1::exact_expected_error(n, mm);
      if (open_segment) value += vc1::make_rational(1, static_cast<long>(n));
      out.lines.push_back("  m = " + std::to_string(mm) + ": " +
                          vc1::to_string(value) + " (~" +
                          format_approx(vc1::to_double(value)) + ")");
      range_rows.push_back({{"m", mm},
                            {"exact", vc1::to_string(value)},
                            {"approx", vc1::to_double(value)}});
    }
  }

  out.lines.push_back("fubini: row mean = " + vc1::to_string(fubini.row_mean) +
                      ", col mean = " + vc1::to_string(fubini.col_mean) +
                      ", ordered pairs = " + std::to_string(fubini.pair_count));
  out.lines.push_back(vc1::kFiniteScaleNote);

  out.body["n"] = n;
  out.body["m"] = m;
  out.body["convention"] = open_segment ? "open" : "closed";
  out.body["exact"] = {{"rational", vc1::to_string(exact)},
                       {"approx", vc1::to_double(exact)}};
  out.body["monte_carlo"] = {{"mean", mc.mean},
                             {"half_width_3se", mc.half_width},
                             {"trials", mc.trials},
                             {"seed", mc.seed},
                             {"generator", mc.generator}};
  out.body["fubini"] = {{"row_mean", vc1::to_string(fubini.row_mean)},
                        {"col_mean", vc1::to_string(fubini.col_mean)},
                        {"pair_count", fubini.pair_count}};
  if (!m_range.empty()) out.body["m_range"] = range_rows;
  out.body["note"] = vc1::kFiniteScaleNote;
  return out.emit(0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VC-dimension-1 structure, compression and ERM toolkit"};
  app.require_subcommand(1);

  Output out;
  out.command = command_echo(argc, argv);
  int exit_code = 0;

  std::string file, f_spec = "lex-min", dot_path, sample_spec, point_spec;
  std::size_t max_n = 24, max_h = 1 << 16;
  std::optional<std::size_t> max_m;
  bool sweep = false;
  std::size_t sweep_n = 4;
  std::size_t erm_n = 0, erm_m = 0, trials = 100000;
  std::uint64_t seed = 42;
  std::string pi_spec = "identity", m_range;
  bool open_segment = false;

  auto* vcdim = app.add_subcommand("vcdim", "Exact VC dimension with a shattered-set witness");
  vcdim->add_option("file", file, "concept class file")->required();
  vcdim->add_option("--max-n", max_n, "exact-search cap on the domain size");
  vcdim->add_option("--max-h", max_h, "exact-search cap on the class size");
  vcdim->add_flag("--json", out.as_json, "emit a JSON report");
  vcdim->callback([&] { exit_code = run_vcdim(file, max_n, max_h, out); });

  auto* structure = app.add_subcommand(
      "structure", "Tree-order certificate or shattered-pair refutation");
  structure->add_option("file", file, "concept class file")->required();
  structure->add_option("--f", f_spec, "representation: hypothesis index in the file, or lex-min");
  structure->add_option("--dot", dot_path, "write the certificate forest as Graphviz DOT");
  structure->add_flag("--json", out.as_json, "emit a JSON report");
  structure->callback([&] { exit_code = run_structure(file, f_spec, dot_path, out); });

  auto* compress = app.add_subcommand("compress", "Compress a realizable sample to one point");
  compress->add_option("file", file, "concept class file")->required();
  compress->add_option("--sample", sample_spec, "comma-separated name=bit pairs")->required();
  compress->add_option("--f", f_spec, "representation: hypothesis index in the file, or lex-min");
  compress->add_flag("--json", out.as_json, "emit a JSON report");
  compress->callback([&] { exit_code = run_compress(file, sample_spec, f_spec, out); });

  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct a hypothesis from a compressed point");
  reconstruct->add_option("file", file, "concept class file")->required();
  reconstruct->add_option("--point", point_spec, "point name, or EMPTY")->required();
  reconstruct->add_option("--f", f_spec, "representation: hypothesis index in the file, or lex-min");
  reconstruct->add_flag("--json", out.as_json, "emit a JSON report");
  reconstruct->callback([&] { exit_code = run_reconstruct(file, point_spec, f_spec, out); });

  auto* verify = app.add_subcommand("verify", "Exhaustive compression-contract audit");
  verify->add_option("file", file, "concept class file");
  verify->add_option("--max-m", max_m, "largest sample point-set size to replay");
  verify->add_flag("--sweep", sweep, "audit every class on small domains instead of a file");
  verify->add_option("--sweep-n", sweep_n, "largest domain size for --sweep");
  verify->add_flag("--json", out.as_json, "emit a JSON report");
  verify->callback([&] {
    if (sweep) {
      exit_code = run_verify_sweep(sweep_n, out);
    } else {
      if (file.empty())
        throw vc1::ValidationError("verify needs a class file or --sweep");
      exit_code = run_verify_file(file, max_m, out);
    }
  });

  auto* erm = app.add_subcommand("erm", "Ordinal-class ERM experiment with exact expectations");
  erm->add_option("--n", erm_n, "domain size")->required();
  erm->add_option("--m", erm_m, "sample size")->required();
  erm->add_option("--trials", trials, "Monte-Carlo trials");
  erm->add_option("--seed", seed, "Monte-Carlo seed");
  erm->add_option("--pi", pi_spec, "rank permutation: identity, or a file of N ranks");
  erm->add_flag("--open-segment", open_segment, "use the literal strictly-below segment");
  erm->add_option("--m-range", m_range, "print exact errors for sample sizes A:B");
  erm->add_flag("--json", out.as_json, "emit a JSON report");
  erm->callback([&] {
    exit_code = run_erm(erm_n, erm_m, trials, seed, pi_spec, open_segment, m_range, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const vc1::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const vc1::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const vc1::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}

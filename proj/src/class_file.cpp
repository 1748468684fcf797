#include "vc1/class_file.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace vc1 {

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte_pos) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte_pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

ClassFile parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ValidationError("parse error at line " + std::to_string(line) +
                          ", column " + std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("domain") || !doc.contains("hypotheses"))
    throw ValidationError(
        "class file must be an object with \"domain\" and \"hypotheses\" arrays");

  ClassFile file;
  const auto& dom = doc["domain"];
  const auto& hyps = doc["hypotheses"];
  if (!dom.is_array() || !hyps.is_array())
    throw ValidationError("\"domain\" and \"hypotheses\" must be arrays");
  for (const auto& item : dom) {
    if (!item.is_string()) throw ValidationError("domain entries must be strings");
    file.domain.push_back(item.get<std::string>());
  }
  for (const auto& item : hyps) {
    if (!item.is_string()) throw ValidationError("hypothesis entries must be strings");
    file.hypotheses.push_back(item.get<std::string>());
  }
  return file;
}

ClassFile parse_plain(const std::string& text) {
  ClassFile file;
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    for (std::size_t i = 0; i < line.size(); ++i)
      if (line[i] != '0' && line[i] != '1')
        throw ValidationError("parse error at line " + std::to_string(line_no) +
                              ", column " + std::to_string(i + 1) +
                              ": expected '0' or '1'");
    file.hypotheses.push_back(line);
  }
  if (file.hypotheses.empty())
    throw ValidationError("class file contains no hypotheses");
  const std::size_t n = file.hypotheses.front().size();
  for (std::size_t i = 0; i < n; ++i) file.domain.push_back("p" + std::to_string(i));
  return file;
}

}  // namespace

ClassFile parse_class_file(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_plain(text);
  }
  throw ValidationError("class file is empty");
}

std::string serialize_class_file(const ClassFile& file) {
  nlohmann::json doc;
  doc["domain"] = file.domain;
  doc["hypotheses"] = file.hypotheses;
  return doc.dump(2) + "\n";
}

ConceptClass to_concept_class(const ClassFile& file) {
  if (file.hypotheses.empty())
    throw ValidationError("class file contains no hypotheses");
  Domain domain{file.domain};
  std::vector<Hypothesis> hypotheses;
  hypotheses.reserve(file.hypotheses.size());
  for (std::size_t i = 0; i < file.hypotheses.size(); ++i) {
    const std::string& row = file.hypotheses[i];
    if (row.size() != domain.size())
      throw ValidationError("hypothesis " + std::to_string(i) + " has length " +
                            std::to_string(row.size()) + ", expected " +
                            std::to_string(domain.size()));
    hypotheses.push_back(Hypothesis::from_string(row));
  }
  return ConceptClass(std::move(domain), std::move(hypotheses));
}

}  // namespace vc1

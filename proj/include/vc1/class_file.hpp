#pragma once

// On-disk concept-class format. Two grammars are accepted: a JSON object
// {"domain": [names...], "hypotheses": ["0101", ...]} and a plain format of
// one binary string per line with implicit point names p0..p(N-1). Content
// round-trips through serialize exactly.

#include <string>
#include <vector>

#include "vc1/concept_class.hpp"

namespace vc1 {

struct ClassFile {
  std::vector<std::string> domain;      // point identifiers
  std::vector<std::string> hypotheses;  // rows as written, duplicates kept

  bool operator==(const ClassFile&) const = default;
};

// Detects the grammar from the first non-whitespace byte ('{' means JSON).
// Throws ValidationError with line/column positions on malformed input.
ClassFile parse_class_file(const std::string& text);

std::string serialize_class_file(const ClassFile& file);

// Validates and canonicalizes (deduplicates, sorts) into a ConceptClass.
ConceptClass to_concept_class(const ClassFile& file);

}  // namespace vc1

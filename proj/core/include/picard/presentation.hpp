#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "picard/hermitian.hpp"
#include "picard/words.hpp"

namespace picard::fpgroups {

/// A finitely presented group. Relators are freely and cyclically reduced
/// and kept in source order; exact duplicates and relators that reduce to
/// the empty word are dropped at parse time (with counts recorded).
struct Presentation {
  std::string name;
  std::vector<std::string> generators;
  std::vector<Word> relators;
  /// Original relator count when this presentation was truncated; quotient
  /// orders computed from a truncated presentation only bound the true index
  /// ("index divides N").
  std::optional<size_t> truncated_from;
  /// SHA-256 of the source bytes; empty for presentations built in memory.
  std::string content_hash;
  size_t dropped_empty_relators = 0;
  size_t dropped_duplicate_relators = 0;

  /// 1-based index, or nullopt.
  std::optional<int> generator_index(std::string_view gen_name) const;
};

/// Parses either the native line-oriented format
///
///   group G
///   gens a b
///   rels
///   a^2 b^3
///   (a*b)^7
///
/// (statements end at ';' or end of line, '#' starts a comment) or the
/// computer-algebra subset grammar
///
///   G<a,b> := Group< a, b | a^2, b^2, (a*b)^3 >;
///
/// Word syntax in both: '*', '^n', '^-n', parentheses, plus 'a^b'
/// conjugation and '(a,b)' commutators. The format is auto-detected.
/// Parsing is streaming: memory use is bounded by the longest relator.
Presentation parse_presentation(std::istream& in, const std::string& source_name = "");

Presentation parse_presentation_text(const std::string& text, const std::string& source_name = "");

Presentation parse_presentation_file(const std::string& path);

/// Parses a single word over the given generator names, e.g. "(a*b)^-2*c".
Word parse_word(const std::string& text, const std::vector<std::string>& generators);

/// Appends the given words as relators: the resulting presentation presents
/// the quotient by the normal closure of the words, so its order equals the
/// index of that closure.
Presentation normal_closure_quotient(const Presentation& p, const std::vector<Word>& ws);

/// Keeps the first k relators in source order. The truncated group surjects
/// onto the original, so any finite quotient order is a multiple of the true
/// one. Throws std::out_of_range for k > relator count.
Presentation truncate_presentation(const Presentation& p, size_t k);

/// Sidecar file binding generator names to matrices for cross-validation:
///
///   domain d=3            (or: domain quaternion)
///   gen R  [1,0,0; 0,1/2+1/2*r,0; 0,0,1]
///   gen I0 [0,0,1; 0,-1,0; 1,0,0]
struct GeneratorMap {
  bool quaternion = false;
  std::optional<rings::RingSpec> spec;
  std::vector<std::pair<std::string, hermitian::QuadMatrix>> complex_entries;
  std::vector<std::pair<std::string, hermitian::QuatMatrix>> quaternion_entries;

  const hermitian::QuadMatrix* find_complex(std::string_view gen_name) const;
  const hermitian::QuatMatrix* find_quaternion(std::string_view gen_name) const;
};

GeneratorMap parse_generator_map_file(const std::string& path);

}  // namespace picard::fpgroups

#pragma once

#include <string>
#include <vector>

namespace picard::fpgroups {

/// A letter is a signed 1-based generator index: +g for the generator, -g
/// for its inverse. A word is a (freely reduced, for relators) letter string;
/// the empty word is the identity.
using Letter = int;
using Word = std::vector<Letter>;

/// Cancels adjacent inverse pairs; idempotent and length-non-increasing.
Word free_reduce(const Word& w);

/// Free reduction plus trimming of matching first/last inverse pairs.
Word cyclic_reduce(const Word& w);

Word invert(const Word& w);

bool is_freely_reduced(const Word& w);

std::string word_to_string(const Word& w, const std::vector<std::string>& generator_names);

}  // namespace picard::fpgroups

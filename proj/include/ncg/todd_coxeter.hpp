#pragma once

#include "ncg/group.hpp"

#include <stdexcept>
#include <string_view>

namespace ncg {

/// Coset enumeration hit the live-coset bound before the table closed: either
/// the presented group is infinite or the bound is too small.
class EnumerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// HLT coset enumeration over the trivial subgroup. Relators are scanned in the
/// given order and cosets are processed in creation order; coincidences are
/// resolved with a union-find queue. The closed table is renumbered in
/// breadth-first order from the identity coset, so element 0 is the identity,
/// and each element is labelled by its breadth-first word.
GroupTable todd_coxeter(const Presentation& pres);

/// Parses a word such as "b^-1 a b a^-2" or "abab" against generator names.
/// Single-letter generators may be juxtaposed; exponents follow '^'.
Word parse_word(std::string_view text, const std::vector<std::string>& generatorNames);

/// Builds a presentation from generator names and relator strings.
Presentation make_presentation(const std::vector<std::string>& generatorNames,
                               const std::vector<std::string>& relators, std::size_t cosetBound);

}  // namespace ncg

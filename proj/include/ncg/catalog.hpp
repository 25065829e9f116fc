#pragma once

// Constructors for every group family in the catalog.

#include "ncg/group.hpp"

#include <cstdint>
#include <optional>

namespace ncg {

/// Builds the group described by `spec`. Throws SpecError on parameter
/// violations and EnumerationError when a presentation does not close.
GroupTable build(const GroupSpec& spec);

/// |G| predicted from the parameters alone, or nullopt for presentations.
/// Throws SpecError on invalid parameters.
std::optional<std::int64_t> expected_order(const GroupSpec& spec);

/// Checks the family's parameter constraints; throws SpecError.
void validate(const GroupSpec& spec);

/// Presentations for the families that carry one; used for the
/// enumeration-versus-construction cross-checks. The live-coset bound is four
/// times the expected order.
///   SuzukiSz2              <a,b | a^5, b^4, b^-1 a b a^-2>
///   Quasidihedral(n)       <a,b | a^(2^(n-1)), b^2, b a b^-1 a^-(2^(n-2)-1)>
///   M16                    <a,b | a^8, b^2, b a b a^-5>
///   SG16_3                 <a,b | a^4, b^4, abab, ab^-1ab^-1>
///   GeneralizedQuaternion  <x,y | y^(2m), x^2 y^-m, x y x^-1 y>
///   Dihedral(m)            <a,b | a^m, b^2, b a b^-1 a>
std::optional<Presentation> catalog_presentation(const GroupSpec& spec);

/// Smallest r > 1 with r^p = 1 mod q: the action exponent for FrobeniusPQ.
std::int64_t frobenius_action_exponent(std::int64_t p, std::int64_t q);

}  // namespace ncg

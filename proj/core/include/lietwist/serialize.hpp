// Canonical text form: a "twist: [..]" header, then "coeff @ [coords]" lines
// sorted by lattice offset. Coordinates are full exponents (shift included).

#ifndef LIETWIST_SERIALIZE_HPP_
#define LIETWIST_SERIALIZE_HPP_

#include <string>

#include "lietwist/charring.hpp"

namespace lietwist {

std::string to_text(const TorusElement& a);
std::string to_text(const GroupElement& a);
// Throws ParseError.
TorusElement torus_from_text(std::size_t rank, const std::string& text);
GroupElement group_from_text(const ScopePtr& scope, const std::string& text);
RationalWeight parse_rational_weight(const std::string& text);

} // namespace lietwist

#endif

#ifndef BOREL_NOTATION_HPP
#define BOREL_NOTATION_HPP

#include "borel/root.hpp"
#include "borel/root_system.hpp"

#include <string_view>
#include <vector>

namespace borel {

/// Parses a comma-separated list of roots. Each term is either a sum such as
/// "a1+2a3" or a bracketed coefficient vector such as "[1,0,2,0]".
/// Whitespace is ignored and an empty literal is the empty set. Every term
/// must be a positive root of `rs`; on failure InvalidInput echoes the
/// offending term. The result is deduplicated and in canonical order.
std::vector<Root> parse_root_set(std::string_view literal, const RootSystem& rs);

/// Parses one term without checking membership in a root system.
Root parse_root_term(std::string_view term, int rank);

} // namespace borel

#endif // BOREL_NOTATION_HPP

#include "borel/subalgebra.hpp"

#include "borel/errors.hpp"

namespace borel {

namespace {

RootSet indices_of(std::span<const Root> roots, const RootSystem& rs) {
  RootSet set(rs.size());
  for (const Root& r : roots) {
    auto k = rs.index_of(r);
    if (!k) throw InvalidInput(to_string(r) + " is not a positive root of " + rs.label());
    set.set(*k);
  }
  return set;
}

bool bracket_closed(const RootSet& set, const RootSystem& rs) {
  const auto members = set.indices();
  for (int a : members)
    for (int b : members)
      if (const int s = rs.sum_index(a, b); s >= 0 && !set.test(s)) return false;
  return true;
}

} // namespace

MonomialSubalgebra::MonomialSubalgebra(std::span<const Root> roots, const RootSystem& rs)
    : members_(indices_of(roots, rs)) {
  if (!bracket_closed(members_, rs)) throw InvalidInput("root set does not span a subalgebra");
}

std::vector<Root> MonomialSubalgebra::roots(const RootSystem& rs) const {
  std::vector<Root> out;
  for (int i : members_.indices()) out.push_back(rs.root(i));
  return out;
}

bool is_monomial_subalgebra(std::span<const Root> roots, const RootSystem& rs) {
  return bracket_closed(indices_of(roots, rs), rs);
}

MonomialSubalgebra monomial_normalizer(const MonomialSubalgebra& s, const RootSystem& rs) {
  const auto members = s.members().indices();
  RootSet out(rs.size());
  for (int gamma = 0; gamma < rs.size(); ++gamma) {
    bool normalizes = true;
    for (int delta : members) {
      const int sum = rs.sum_index(gamma, delta);
      if (sum >= 0 && !s.members().test(sum)) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) out.set(gamma);
  }
  return MonomialSubalgebra(std::move(out));
}

std::vector<Root> monomial_centralizer(const MonomialSubalgebra& s, const RootSystem& rs) {
  const auto members = s.members().indices();
  std::vector<Root> out;
  for (int gamma = 0; gamma < rs.size(); ++gamma) {
    bool commutes = true;
    for (int delta : members) commutes = commutes && rs.sum_index(gamma, delta) < 0;
    if (commutes) out.push_back(rs.root(gamma));
  }
  return out;
}

} // namespace borel

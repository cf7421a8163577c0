#include "borel/borel_basis.hpp"

#include "borel/errors.hpp"

namespace borel {

std::vector<BasisElement> BorelBasis::elements() const {
  std::vector<BasisElement> out;
  out.reserve(size());
  for (const auto& h : cartan_part) out.emplace_back(h);
  for (const auto& x : nilradical_part) out.emplace_back(x);
  return out;
}

BorelBasis borel_basis(const RootSystem& rs) {
  BorelBasis basis;
  for (int i = 0; i < rs.rank(); ++i) basis.cartan_part.push_back(CartanGenerator{i});
  basis.nilradical_part = nilradical_basis(rs);
  return basis;
}

std::vector<RootVector> nilradical_basis(const RootSystem& rs) {
  std::vector<RootVector> out;
  out.reserve(static_cast<std::size_t>(rs.size()));
  for (const Root& r : rs.positive_roots()) out.push_back(RootVector{r});
  return out;
}

std::optional<Root> monomial_bracket(const Root& gamma, const Root& delta, const RootSystem& rs) {
  auto a = rs.index_of(gamma);
  auto b = rs.index_of(delta);
  if (!a) throw InvalidInput(to_string(gamma) + " is not a positive root of " + rs.label());
  if (!b) throw InvalidInput(to_string(delta) + " is not a positive root of " + rs.label());
  const int k = rs.sum_index(*a, *b);
  if (k < 0) return std::nullopt;
  return rs.root(k);
}

std::string to_string(const BasisElement& e, bool unicode) {
  if (const auto* h = std::get_if<CartanGenerator>(&e))
    return "H[" + to_string(Root::simple(h->index + 1, h->index), unicode) + "]";
  return "X[" + to_string(std::get<RootVector>(e).root, unicode) + "]";
}

} // namespace borel

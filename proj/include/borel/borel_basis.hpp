#ifndef BOREL_BOREL_BASIS_HPP
#define BOREL_BOREL_BASIS_HPP

#include "borel/root.hpp"
#include "borel/root_system.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace borel {

/// H_{alpha_i}: the simple coroot alpha_i^vee. A root beta evaluates on it as
/// <beta, alpha_i^vee>. `index` is 0-based.
struct CartanGenerator {
  int index;
  friend bool operator==(const CartanGenerator&, const CartanGenerator&) = default;
};

/// X_alpha for a positive root alpha.
struct RootVector {
  Root root;
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

using BasisElement = std::variant<CartanGenerator, RootVector>;

/// Basis of the Borel subalgebra: Cartan part followed by the nilradical.
struct BorelBasis {
  std::vector<CartanGenerator> cartan_part;
  std::vector<RootVector> nilradical_part;

  std::size_t size() const { return cartan_part.size() + nilradical_part.size(); }
  /// Cartan generators first, then root vectors in canonical root order.
  std::vector<BasisElement> elements() const;
};

BorelBasis borel_basis(const RootSystem& rs);

/// Basis of the nilradical g', one root vector per positive root.
std::vector<RootVector> nilradical_basis(const RootSystem& rs);

/// Sign-free bracket [X_gamma, X_delta]: gamma + delta when that is a positive
/// root, otherwise nullopt (the bracket vanishes). Structure constants are not
/// modelled. Throws InvalidInput if either argument is not in R+.
std::optional<Root> monomial_bracket(const Root& gamma, const Root& delta, const RootSystem& rs);

/// "H[a1]" / "X[a1+2a2]".
std::string to_string(const BasisElement& e, bool unicode = false);

} // namespace borel

#endif // BOREL_BOREL_BASIS_HPP

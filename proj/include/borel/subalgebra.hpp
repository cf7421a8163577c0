#ifndef BOREL_SUBALGEBRA_HPP
#define BOREL_SUBALGEBRA_HPP

// Sign-free analysis of subalgebras of the nilradical spanned by root
// vectors. Subalgebras spanned by generic combinations such as
// X_{a1} + c X_{a2} need structure-constant signs and are not handled here.

#include "borel/root.hpp"
#include "borel/root_set.hpp"
#include "borel/root_system.hpp"

#include <span>
#include <vector>

namespace borel {

/// Root set S with span{X_gamma : gamma in S} closed under the bracket.
class MonomialSubalgebra {
public:
  MonomialSubalgebra() = default;
  /// Throws InvalidInput if a root is not in R+ or S is not bracket-closed.
  MonomialSubalgebra(std::span<const Root> roots, const RootSystem& rs);

  const RootSet& members() const { return members_; }
  std::vector<Root> roots(const RootSystem& rs) const;
  int dimension() const { return members_.count(); }

  friend bool operator==(const MonomialSubalgebra&, const MonomialSubalgebra&) = default;

private:
  friend MonomialSubalgebra monomial_normalizer(const MonomialSubalgebra&, const RootSystem&);
  explicit MonomialSubalgebra(RootSet members) : members_(std::move(members)) {}

  RootSet members_;
};

/// gamma, delta in S and gamma + delta in R+ imply gamma + delta in S.
/// Throws InvalidInput for members outside R+.
bool is_monomial_subalgebra(std::span<const Root> roots, const RootSystem& rs);

/// Root vectors X_gamma of g' with [X_gamma, span S] inside span S, i.e.
/// gamma + delta is not a root or lies in S for every delta in S.
MonomialSubalgebra monomial_normalizer(const MonomialSubalgebra& s, const RootSystem& rs);

/// Roots gamma with gamma + delta not a root for every delta in S. Returned as
/// a plain root list, sorted.
std::vector<Root> monomial_centralizer(const MonomialSubalgebra& s, const RootSystem& rs);

} // namespace borel

#endif // BOREL_SUBALGEBRA_HPP

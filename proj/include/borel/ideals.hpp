#ifndef BOREL_IDEALS_HPP
#define BOREL_IDEALS_HPP

#include "borel/integer_kernel.hpp"
#include "borel/root.hpp"
#include "borel/root_set.hpp"
#include "borel/root_system.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace borel {

/// An ideal of the Borel subalgebra contained in the nilradical. It is the
/// span of the root vectors X_gamma for gamma in R_J, where R_J is closed
/// under adding simple roots inside R+.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  /// Unchecked: `members` must already be closed.
  explicit MonomialIdeal(RootSet members) : members_(std::move(members)) {}

  static MonomialIdeal zero(const RootSystem& rs) { return MonomialIdeal(RootSet(rs.size())); }
  /// The whole nilradical g'.
  static MonomialIdeal full(const RootSystem& rs);
  /// Throws InvalidInput if a root is not in R+ or the set is not closed.
  static MonomialIdeal from_roots(std::span<const Root> roots, const RootSystem& rs);

  const RootSet& members() const { return members_; }
  int dimension() const { return members_.count(); }
  bool is_zero() const { return members_.empty(); }
  bool contains(int root_index) const { return members_.test(root_index); }

  /// R_J in canonical root order.
  std::vector<Root> roots(const RootSystem& rs) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  /// By dimension, then canonical order of the sorted root lists.
  friend std::strong_ordering operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.members_ <=> b.members_;
  }

private:
  RootSet members_;
};

struct MonomialIdealHash {
  std::size_t operator()(const MonomialIdeal& j) const noexcept { return j.members().hash(); }
};

/// "[X[a1], X[a1+a2]]", or "0" for the zero ideal.
std::string to_string(const MonomialIdeal& ideal, const RootSystem& rs, bool unicode = false);

/// Cartan elements t = sum_j c_j H_{alpha_j} killed by every root outside R_J.
/// Each row of `vectors` is a coefficient vector (c_1, ..., c_l).
struct CartanKernelBasis {
  IntMatrix<std::int64_t> vectors;
  int dimension() const { return static_cast<int>(vectors.rows()); }
};

struct ClassifiedIdeal {
  MonomialIdeal ideal;
  CartanKernelBasis kernel;
  /// Nonzero Cartan part allowed while R_J is a proper subset of R+.
  bool mixed = false;
};

/// Every ideal of the Borel subalgebra is span(S) + span(X_gamma : gamma in
/// R_J) where S is any subspace of the kernel paired with R_J.
struct IdealClassification {
  std::vector<ClassifiedIdeal> entries;
};

struct EnumerationOptions {
  /// Worker threads used to extend each frontier; results do not depend on it.
  unsigned jobs = 1;
};

/// Singletons {gamma} with gamma + alpha_j not a root for every j. For an
/// irreducible system this is exactly {highest root}.
std::vector<MonomialIdeal> one_dimensional_ideals(const RootSystem& rs);

/// Roots gamma outside R_J such that, for every simple alpha_j, either
/// gamma + alpha_j is not a root or it already lies in R_J. Throws InvalidInput
/// if `ideal` is not closed.
std::vector<Root> extension_candidates(const MonomialIdeal& ideal, const RootSystem& rs);

/// Every nonzero monomial ideal (g' included), grown breadth-first from the
/// one-dimensional ideals by adjoining extension candidates. Sorted.
std::vector<MonomialIdeal> enumerate_nilradical_ideals(const RootSystem& rs,
                                                       const EnumerationOptions& options = {});

/// Closure test: gamma in S and gamma + alpha_j in R+ imply gamma + alpha_j in S.
/// Throws InvalidInput for members outside R+.
bool is_monomial_ideal(std::span<const Root> roots, const RootSystem& rs);

/// Nonzero monomial ideals found by testing all 2^|R+| subsets. Throws
/// CapacityError when |R+| exceeds `max_roots`.
std::vector<MonomialIdeal> brute_force_ideals(const RootSystem& rs, int max_roots = 20);

/// No two members of R_J sum to a root.
bool is_abelian(const MonomialIdeal& ideal, const RootSystem& rs);

/// Abelian monomial ideals, the zero ideal first, sorted.
std::vector<MonomialIdeal> abelian_ideals(const RootSystem& rs, const EnumerationOptions& options = {});

/// Exact intersection of ker(beta) over beta in R+ \ R_J, as an integer basis
/// in reduced echelon form.
CartanKernelBasis cartan_kernel(const MonomialIdeal& ideal, const RootSystem& rs);

/// Zero ideal plus every enumerated ideal, each with its Cartan kernel.
IdealClassification full_ideal_classification(const RootSystem& rs,
                                              const EnumerationOptions& options = {});

} // namespace borel

#endif // BOREL_IDEALS_HPP

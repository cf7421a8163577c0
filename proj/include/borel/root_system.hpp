#ifndef BOREL_ROOT_SYSTEM_HPP
#define BOREL_ROOT_SYSTEM_HPP

#include "borel/cartan.hpp"
#include "borel/root.hpp"

#include <Eigen/Core>

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace borel {

/// All positive roots reachable from the simple roots by the reflection
/// closure: a frontier root r is reflected by every simple alpha_j with
/// <r, alpha_j^vee> < 0 until a pass adds nothing. Sorted in canonical order.
std::vector<Root> generate_positive_roots(const CartanMatrix& cartan);

/// Positive root system of an irreducible simple Lie algebra.
///
/// Positive roots are indexed 0..size()-1 in canonical root order (see
/// Root). All lookup tables are built once in the constructor and
/// the object is immutable afterwards.
class RootSystem {
public:
  RootSystem(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// e.g. "F4".
  std::string label() const;
  const CartanMatrix& cartan() const { return cartan_; }

  std::span<const Root> positive_roots() const { return positive_; }
  const Root& root(int index) const { return positive_[static_cast<std::size_t>(index)]; }
  int size() const { return static_cast<int>(positive_.size()); }

  std::vector<Root> simple_roots() const;
  const Root& highest_root() const { return root(highest_); }
  int highest_root_index() const { return highest_; }

  /// Index of `r` among the positive roots, if it is one.
  std::optional<int> index_of(const Root& r) const;
  bool contains(const Root& r) const { return index_of(r).has_value(); }

  /// Index of root(a) + root(b), or -1 if the sum is not a positive root.
  int sum_index(int a, int b) const { return sums_[static_cast<std::size_t>(a * size() + b)]; }
  /// Index of root(a) + alpha_j, or -1.
  int raise_index(int a, int j) const { return raises_[static_cast<std::size_t>(a * rank_ + j)]; }

  /// Row k holds (beta_k(H_1), ..., beta_k(H_l)) for the k-th positive root.
  const Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>& pairing_table() const { return pairings_; }

private:
  Family family_;
  int rank_;
  CartanMatrix cartan_;
  std::vector<Root> positive_;
  std::unordered_map<Root, int, RootHash> lookup_;
  std::vector<int> sums_;
  std::vector<int> raises_;
  Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic> pairings_;
  int highest_ = -1;
};

/// The unique positive root of maximal height. Throws StructuralError if the
/// maximum is not unique or does not coincide with the unique root that no
/// simple root can be added to.
Root highest_root(const RootSystem& rs);

/// Membership in R+ (the zero vector and wrong-length vectors are not roots).
bool is_root(const Root& candidate, const RootSystem& rs);

} // namespace borel

#endif // BOREL_ROOT_SYSTEM_HPP

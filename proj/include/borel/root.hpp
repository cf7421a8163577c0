#ifndef BOREL_ROOT_HPP
#define BOREL_ROOT_HPP

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>

namespace borel {

/// Coefficient vector of a root over the simple roots.
using Coefficients = Eigen::Matrix<int, Eigen::Dynamic, 1>;

/// An element of the root lattice, written in the basis of simple roots.
///
/// Roots are immutable value types. Ordering is the canonical root order used
/// everywhere in the library: by height first, then by decreasing
/// lexicographic order of the coefficient vector (so the simple roots come
/// out as alpha_1, alpha_2, ...).
class Root {
public:
  Root() = default;
  explicit Root(Coefficients coeffs) : coeffs_(std::move(coeffs)) {}
  Root(std::initializer_list<int> coeffs);

  /// The simple root with 0-based index `index` in a system of rank `rank`.
  static Root simple(int rank, int index);
  static Root zero(int rank);

  int rank() const { return static_cast<int>(coeffs_.size()); }
  int operator[](int i) const { return coeffs_(i); }
  const Coefficients& coeffs() const { return coeffs_; }

  int height() const { return coeffs_.sum(); }
  bool is_zero() const { return (coeffs_.array() == 0).all(); }
  /// All coefficients nonnegative and at least one positive.
  bool is_positive() const;

  friend Root operator+(const Root& a, const Root& b);
  friend Root operator-(const Root& a, const Root& b);
  friend Root operator*(int k, const Root& r);
  friend Root operator-(const Root& r);

  friend bool operator==(const Root& a, const Root& b);
  friend std::strong_ordering operator<=>(const Root& a, const Root& b);

private:
  Coefficients coeffs_;
};

/// Sum of coefficients.
inline int root_height(const Root& r) { return r.height(); }

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

/// "a1+2a2" style; coefficient 1 and zero terms are omitted; the zero vector
/// renders as "0". With `unicode`, uses "α₁+2α₂".
std::string to_string(const Root& r, bool unicode = false);

/// Raw vector form, e.g. "[1,2]".
std::string to_vector_string(const Root& r);

} // namespace borel

#endif // BOREL_ROOT_HPP

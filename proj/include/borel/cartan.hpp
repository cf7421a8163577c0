#ifndef BOREL_CARTAN_HPP
#define BOREL_CARTAN_HPP

#include "borel/root.hpp"

#include <Eigen/Core>

#include <string>
#include <string_view>

namespace borel {

enum class Family { A, B, C, D, E, F, G };

char family_letter(Family f);

/// Parses "A".."G" (case-insensitive). Throws InvalidInput otherwise.
Family parse_family(std::string_view text);

/// Throws InvalidInput naming the violated constraint when (family, rank) is
/// not an irreducible type we support.
void validate_rank(Family family, int rank);

/// entry(i, j) = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
using CartanMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// Bourbaki node numbering. B_n has alpha_n short, C_n has alpha_n long,
/// G_2 has alpha_1 short, F_4 has alpha_1, alpha_2 long.
CartanMatrix cartan_matrix(Family family, int rank);

/// Diagonal 2, off-diagonal in {0,-1,-2,-3}, symmetric zero pattern.
void validate_cartan(const CartanMatrix& cartan);

/// <r, alpha_j^vee> = sum_i r_i * entry(i, j); `j` is 0-based.
int coroot_pairing(const Root& r, int j, const CartanMatrix& cartan);

/// The row vector (<r, alpha_1^vee>, ..., <r, alpha_l^vee>).
inline Eigen::Matrix<int, 1, Eigen::Dynamic> coroot_pairings(const Root& r,
                                                             const CartanMatrix& cartan) {
  return r.coeffs().transpose() * cartan;
}

/// sigma_j(r) = r - <r, alpha_j^vee> alpha_j. May leave the positive cone.
Root reflect_simple(const Root& r, int j, const CartanMatrix& cartan);

/// One-line text description of the Dynkin diagram, e.g. "B2: a1 =>= a2".
std::string dynkin_description(Family family, int rank, const CartanMatrix& cartan);

} // namespace borel

#endif // BOREL_CARTAN_HPP

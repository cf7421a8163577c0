#include "borel/cartan.hpp"

#include "borel/errors.hpp"

#include <cctype>

namespace borel {

namespace {

void link(CartanMatrix& m, int i, int j) {
  m(i, j) = -1;
  m(j, i) = -1;
}

} // namespace

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

Family parse_family(std::string_view text) {
  if (text.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw InvalidInput("invalid family '" + std::string(text) + "': expected one of A, B, C, D, E, F, G");
}

void validate_rank(Family family, int rank) {
  auto fail = [&](const std::string& rule) {
    throw InvalidInput("invalid rank " + std::to_string(rank) + " for family " +
                       family_letter(family) + ": " + rule);
  };
  switch (family) {
  case Family::A:
    if (rank < 1) fail("A requires rank >= 1");
    break;
  case Family::B:
  case Family::C:
    if (rank < 2) fail(std::string(1, family_letter(family)) + " requires rank >= 2");
    break;
  case Family::D:
    if (rank < 3) fail("D requires rank >= 3 (D2 is reducible)");
    break;
  case Family::E:
    if (rank < 6 || rank > 8) fail("E requires rank in {6, 7, 8}");
    break;
  case Family::F:
    if (rank != 4) fail("F requires rank = 4");
    break;
  case Family::G:
    if (rank != 2) fail("G requires rank = 2");
    break;
  }
}

CartanMatrix cartan_matrix(Family family, int rank) {
  validate_rank(family, rank);
  CartanMatrix m = 2 * CartanMatrix::Identity(rank, rank);
  const int n = rank;
  switch (family) {
  case Family::A:
    for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
    break;
  case Family::B:
    for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
    m(n - 2, n - 1) = -2; // alpha_{n-1} long, alpha_n short
    break;
  case Family::C:
    for (int i = 0; i + 1 < n; ++i) link(m, i, i + 1);
    m(n - 1, n - 2) = -2; // alpha_n long
    break;
  case Family::D:
    for (int i = 0; i + 2 < n; ++i) link(m, i, i + 1);
    link(m, n - 3, n - 1);
    break;
  case Family::E:
    link(m, 0, 2);
    link(m, 1, 3);
    for (int i = 2; i + 1 < n; ++i) link(m, i, i + 1);
    break;
  case Family::F:
    link(m, 0, 1);
    link(m, 2, 3);
    m(1, 2) = -2; // alpha_2 long, alpha_3 short
    m(2, 1) = -1;
    break;
  case Family::G:
    m(0, 1) = -1;
    m(1, 0) = -3; // alpha_1 short
    break;
  }
  return m;
}

void validate_cartan(const CartanMatrix& cartan) {
  if (cartan.rows() != cartan.cols() || cartan.rows() == 0)
    throw InvalidInput("Cartan matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < cartan.rows(); ++i) {
    if (cartan(i, i) != 2) throw InvalidInput("Cartan matrix diagonal entry is not 2");
    for (Eigen::Index j = 0; j < cartan.cols(); ++j) {
      if (i == j) continue;
      int v = cartan(i, j);
      if (v > 0 || v < -3) throw InvalidInput("Cartan matrix off-diagonal entry outside {0,-1,-2,-3}");
      if ((v == 0) != (cartan(j, i) == 0))
        throw InvalidInput("Cartan matrix zero pattern is not symmetric");
    }
  }
}

int coroot_pairing(const Root& r, int j, const CartanMatrix& cartan) {
  if (r.rank() != cartan.rows())
    throw InvalidInput("root has length " + std::to_string(r.rank()) + ", Cartan matrix has rank " +
                       std::to_string(cartan.rows()));
  if (j < 0 || j >= cartan.cols())
    throw InvalidInput("simple root index " + std::to_string(j + 1) + " out of range");
  return r.coeffs().dot(cartan.col(j));
}

Root reflect_simple(const Root& r, int j, const CartanMatrix& cartan) {
  const int k = coroot_pairing(r, j, cartan);
  return r - k * Root::simple(r.rank(), j);
}

std::string dynkin_description(Family family, int rank, const CartanMatrix& cartan) {
  // Bonds: "--" single, "==>" double, "===>" triple; the arrow points at the
  // shorter root.
  std::string out = std::string(1, family_letter(family)) + std::to_string(rank) + ":";
  bool any = false;
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      if (cartan(i, j) == 0) continue;
      const int bond = cartan(i, j) * cartan(j, i);
      std::string edge = bond == 1 ? "--" : std::string(static_cast<std::size_t>(bond), '=');
      if (bond > 1) edge = -cartan(i, j) > -cartan(j, i) ? edge + ">" : "<" + edge;
      out += std::string(any ? "," : "") + " a" + std::to_string(i + 1) + " " + edge + " a" +
             std::to_string(j + 1);
      any = true;
    }
  }
  if (!any) out += " a1";
  return out;
}

} // namespace borel

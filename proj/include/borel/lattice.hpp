#ifndef BOREL_LATTICE_HPP
#define BOREL_LATTICE_HPP

#include "borel/ideals.hpp"
#include "borel/root_system.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace borel {

/// Inclusion poset of monomial ideals, zero ideal at the bottom.
struct IdealLattice {
  /// Sorted by (dimension, canonical order); nodes[0] is the zero ideal.
  std::vector<MonomialIdeal> nodes;
  /// (smaller, larger) node indices; the larger has exactly one more root.
  std::vector<std::pair<std::size_t, std::size_t>> cover_edges;
};

/// Adds the zero ideal when absent. Throws InvalidInput if any member is not
/// closed under adding simple roots.
IdealLattice build_lattice(std::span<const MonomialIdeal> ideals, const RootSystem& rs);

struct DimensionCounts {
  std::map<int, int> by_dimension;  // nonzero ideals only
  int total_nonzero = 0;
  int total_with_zero = 0;
  int total_abelian = 0;  // zero ideal included
};

/// Histogram over |R_J|. A zero ideal in `ideals` is ignored; totals state
/// both conventions.
DimensionCounts counts_by_dimension(std::span<const MonomialIdeal> ideals, const RootSystem& rs);

struct DotOptions {
  std::string graph_name = "ideals";
  bool unicode = false;
  bool mark_abelian = true;
};

/// Graphviz digraph, bottom-to-top. Byte-stable for fixed input.
std::string export_dot(const IdealLattice& lattice, const RootSystem& rs, const DotOptions& options = {});

} // namespace borel

#endif // BOREL_LATTICE_HPP

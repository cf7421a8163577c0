#include "borel/lattice.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace borel {

IdealLattice build_lattice(std::span<const MonomialIdeal> ideals, const RootSystem& rs) {
  IdealLattice lattice;
  lattice.nodes.assign(ideals.begin(), ideals.end());
  for (const auto& j : lattice.nodes) {
    if (j.members().universe() != rs.size())
      throw InvalidInput("lattice member does not belong to " + rs.label());
    if (!is_monomial_ideal(j.roots(rs), rs))
      throw InvalidInput("lattice member " + to_string(j, rs) + " is not an ideal");
  }
  if (std::none_of(lattice.nodes.begin(), lattice.nodes.end(), [](const auto& j) { return j.is_zero(); }))
    lattice.nodes.push_back(MonomialIdeal::zero(rs));
  std::sort(lattice.nodes.begin(), lattice.nodes.end());
  lattice.nodes.erase(std::unique(lattice.nodes.begin(), lattice.nodes.end()), lattice.nodes.end());

  std::unordered_map<RootSet, std::size_t, RootSetHash> position;
  for (std::size_t k = 0; k < lattice.nodes.size(); ++k) position.emplace(lattice.nodes[k].members(), k);

  // Every one-root-smaller node is found by deleting a member and looking the
  // result up, so edges come out grouped by their upper end.
  for (std::size_t upper = 0; upper < lattice.nodes.size(); ++upper) {
    std::vector<std::size_t> lowers;
    for (int r : lattice.nodes[upper].members().indices()) {
      RootSet smaller = lattice.nodes[upper].members();
      smaller.reset(r);
      if (auto it = position.find(smaller); it != position.end()) lowers.push_back(it->second);
    }
    std::sort(lowers.begin(), lowers.end());
    for (auto lower : lowers) lattice.cover_edges.emplace_back(lower, upper);
  }
  std::sort(lattice.cover_edges.begin(), lattice.cover_edges.end());
  return lattice;
}

DimensionCounts counts_by_dimension(std::span<const MonomialIdeal> ideals, const RootSystem& rs) {
  DimensionCounts counts;
  counts.total_abelian = 1;
  for (const auto& j : ideals) {
    if (j.is_zero()) continue;
    ++counts.by_dimension[j.dimension()];
    ++counts.total_nonzero;
    if (is_abelian(j, rs)) ++counts.total_abelian;
  }
  counts.total_with_zero = counts.total_nonzero + 1;
  return counts;
}

namespace {

std::string dot_label(const MonomialIdeal& j, const RootSystem& rs, bool unicode) {
  if (j.is_zero()) return "0";
  std::string out = "{";
  bool first = true;
  for (const Root& r : j.roots(rs)) {
    if (!first) out += ", ";
    out += to_string(r, unicode);
    first = false;
  }
  return out + "}";
}

} // namespace

std::string export_dot(const IdealLattice& lattice, const RootSystem& rs, const DotOptions& options) {
  const std::string name = options.graph_name.empty() ? "ideals" : options.graph_name;
  std::string out = "digraph \"" + name + "\" {\n";
  out += "  rankdir=BT;\n";
  out += "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t k = 0; k < lattice.nodes.size(); ++k) {
    const auto& j = lattice.nodes[k];
    out += "  n" + std::to_string(k) + " [label=\"" + dot_label(j, rs, options.unicode) + "\", dim=" +
           std::to_string(j.dimension());
    if (options.mark_abelian && is_abelian(j, rs)) out += ", abelian=true, style=filled, fillcolor=\"#d9ead3\"";
    out += "];\n";
  }
  for (const auto& [lower, upper] : lattice.cover_edges)
    out += "  n" + std::to_string(lower) + " -> n" + std::to_string(upper) + ";\n";
  out += "}\n";
  return out;
}

} // namespace borel

#include "borel/ideals.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace borel {

namespace {

bool closed_under_raising(const RootSet& members, const RootSystem& rs) {
  for (int a : members.indices())
    for (int j = 0; j < rs.rank(); ++j) {
      const int up = rs.raise_index(a, j);
      if (up >= 0 && !members.test(up)) return false;
    }
  return true;
}

RootSet to_root_set(std::span<const Root> roots, const RootSystem& rs) {
  RootSet set(rs.size());
  for (const Root& r : roots) {
    auto k = rs.index_of(r);
    if (!k) throw InvalidInput(to_string(r) + " is not a positive root of " + rs.label());
    set.set(*k);
  }
  return set;
}

bool is_candidate(int gamma, const RootSet& members, const RootSystem& rs) {
  if (members.test(gamma)) return false;
  for (int j = 0; j < rs.rank(); ++j) {
    const int up = rs.raise_index(gamma, j);
    if (up >= 0 && !members.test(up)) return false;
  }
  return true;
}

std::vector<RootSet> extend(const RootSet& members, const RootSystem& rs) {
  std::vector<RootSet> out;
  for (int gamma = 0; gamma < rs.size(); ++gamma) {
    if (!is_candidate(gamma, members, rs)) continue;
    RootSet bigger = members;
    bigger.set(gamma);
    out.push_back(std::move(bigger));
  }
  return out;
}

// Extends every frontier ideal; chunks are processed by `jobs` workers and
// concatenated in chunk order.
std::vector<RootSet> extend_frontier(const std::vector<RootSet>& frontier, const RootSystem& rs,
                                     unsigned jobs) {
  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(frontier.size(), 1));
  std::vector<std::vector<RootSet>> results(workers);
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < frontier.size(); i += workers) {
      auto ext = extend(frontier[i], rs);
      std::move(ext.begin(), ext.end(), std::back_inserter(results[w]));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  std::vector<RootSet> merged;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(merged));
  return merged;
}

} // namespace

MonomialIdeal MonomialIdeal::full(const RootSystem& rs) {
  RootSet all(rs.size());
  for (int i = 0; i < rs.size(); ++i) all.set(i);
  return MonomialIdeal(std::move(all));
}

MonomialIdeal MonomialIdeal::from_roots(std::span<const Root> roots, const RootSystem& rs) {
  RootSet set = to_root_set(roots, rs);
  if (!closed_under_raising(set, rs))
    throw InvalidInput("root set is not closed under adding simple roots, so it is not an ideal");
  return MonomialIdeal(std::move(set));
}

std::vector<Root> MonomialIdeal::roots(const RootSystem& rs) const {
  std::vector<Root> out;
  for (int i : members_.indices()) out.push_back(rs.root(i));
  return out;
}

std::string to_string(const MonomialIdeal& ideal, const RootSystem& rs, bool unicode) {
  if (ideal.is_zero()) return "0";
  std::string out = "[";
  bool first = true;
  for (int i : ideal.members().indices()) {
    if (!first) out += ", ";
    out += "X[" + to_string(rs.root(i), unicode) + "]";
    first = false;
  }
  return out + "]";
}

std::vector<MonomialIdeal> one_dimensional_ideals(const RootSystem& rs) {
  std::vector<MonomialIdeal> out;
  const RootSet none(rs.size());
  for (int gamma = 0; gamma < rs.size(); ++gamma) {
    if (!is_candidate(gamma, none, rs)) continue;
    RootSet single(rs.size());
    single.set(gamma);
    out.emplace_back(std::move(single));
  }
  return out;
}

std::vector<Root> extension_candidates(const MonomialIdeal& ideal, const RootSystem& rs) {
  if (ideal.members().universe() != rs.size() || !closed_under_raising(ideal.members(), rs))
    throw InvalidInput("extension_candidates: input is not a monomial ideal of " + rs.label());
  std::vector<Root> out;
  for (int gamma = 0; gamma < rs.size(); ++gamma)
    if (is_candidate(gamma, ideal.members(), rs)) out.push_back(rs.root(gamma));
  return out;
}

std::vector<MonomialIdeal> enumerate_nilradical_ideals(const RootSystem& rs,
                                                       const EnumerationOptions& options) {
  std::unordered_set<RootSet, RootSetHash> visited;
  std::vector<RootSet> frontier;
  for (auto& j : one_dimensional_ideals(rs)) {
    visited.insert(j.members());
    frontier.push_back(j.members());
  }
  while (!frontier.empty()) {
    std::vector<RootSet> next;
    for (auto& s : extend_frontier(frontier, rs, options.jobs))
      if (visited.insert(s).second) next.push_back(std::move(s));
    frontier = std::move(next);
  }
  std::vector<MonomialIdeal> out;
  out.reserve(visited.size());
  for (const auto& s : visited) out.emplace_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_monomial_ideal(std::span<const Root> roots, const RootSystem& rs) {
  return closed_under_raising(to_root_set(roots, rs), rs);
}

std::vector<MonomialIdeal> brute_force_ideals(const RootSystem& rs, int max_roots) {
  const int n = rs.size();
  if (n > max_roots || n > 62)
    throw CapacityError("brute-force ideal search over " + rs.label() + " needs 2^" + std::to_string(n) +
                        " subsets; bound is " + std::to_string(std::min(max_roots, 62)) + " roots");
  // up[i]: positive roots of the form root(i) + alpha_j, computed directly from
  // coefficient vectors.
  std::vector<std::uint64_t> up(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rs.rank(); ++j)
      if (auto k = rs.index_of(rs.root(i) + Root::simple(rs.rank(), j)))
        up[static_cast<std::size_t>(i)] |= std::uint64_t{1} << *k;

  std::vector<MonomialIdeal> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    bool closed = true;
    for (std::uint64_t m = mask; m != 0 && closed; m &= m - 1)
      closed = (up[static_cast<std::size_t>(std::countr_zero(m))] & ~mask) == 0;
    if (!closed) continue;
    RootSet set(n);
    for (std::uint64_t m = mask; m != 0; m &= m - 1) set.set(std::countr_zero(m));
    out.emplace_back(std::move(set));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_abelian(const MonomialIdeal& ideal, const RootSystem& rs) {
  const auto members = ideal.members().indices();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a; b < members.size(); ++b)
      if (rs.sum_index(members[a], members[b]) >= 0) return false;
  return true;
}

std::vector<MonomialIdeal> abelian_ideals(const RootSystem& rs, const EnumerationOptions& options) {
  std::vector<MonomialIdeal> out{MonomialIdeal::zero(rs)};
  for (auto& j : enumerate_nilradical_ideals(rs, options))
    if (is_abelian(j, rs)) out.push_back(std::move(j));
  return out;
}

CartanKernelBasis cartan_kernel(const MonomialIdeal& ideal, const RootSystem& rs) {
  const auto& table = rs.pairing_table();
  IntMatrix<std::int64_t> constraints(rs.size() - ideal.dimension(), rs.rank());
  Eigen::Index row = 0;
  for (int b = 0; b < rs.size(); ++b)
    if (!ideal.contains(b)) constraints.row(row++) = table.row(b).cast<std::int64_t>();
  return CartanKernelBasis{integer_nullspace(constraints)};
}

IdealClassification full_ideal_classification(const RootSystem& rs, const EnumerationOptions& options) {
  IdealClassification result;
  auto classify = [&](MonomialIdeal j) {
    ClassifiedIdeal entry{std::move(j), {}, false};
    entry.kernel = cartan_kernel(entry.ideal, rs);
    entry.mixed = entry.kernel.dimension() > 0 && entry.ideal.dimension() != rs.size();
    result.entries.push_back(std::move(entry));
  };
  classify(MonomialIdeal::zero(rs));
  for (auto& j : enumerate_nilradical_ideals(rs, options)) classify(std::move(j));
  return result;
}

} // namespace borel

#include "borel/root_system.hpp"

#include "borel/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace borel {

namespace {

// Highest roots under our node numbering; checked against the generated
// system at construction.
Root expected_highest_root(Family family, int n) {
  Coefficients c = Coefficients::Ones(n);
  switch (family) {
  case Family::A:
    break;
  case Family::B:
    c.tail(n - 1).setConstant(2);
    break;
  case Family::C:
    c.head(n - 1).setConstant(2);
    break;
  case Family::D:
    if (n > 3) c.segment(1, n - 3).setConstant(2);
    break;
  case Family::E:
    if (n == 6) c << 1, 2, 2, 3, 2, 1;
    if (n == 7) c << 2, 2, 3, 4, 3, 2, 1;
    if (n == 8) c << 2, 3, 4, 6, 5, 4, 3, 2;
    break;
  case Family::F:
    c << 2, 3, 4, 2;
    break;
  case Family::G:
    c << 3, 2;
    break;
  }
  return Root(c);
}

} // namespace

std::vector<Root> generate_positive_roots(const CartanMatrix& cartan) {
  validate_cartan(cartan);
  const int rank = static_cast<int>(cartan.rows());
  std::unordered_set<Root, RootHash> seen;
  std::vector<Root> frontier;
  for (int i = 0; i < rank; ++i) {
    frontier.push_back(Root::simple(rank, i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int j = 0; j < rank; ++j) {
        if (coroot_pairing(r, j, cartan) >= 0) continue;
        Root image = reflect_simple(r, j, cartan);
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Root> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

RootSystem::RootSystem(Family family, int rank)
    : family_(family), rank_(rank), cartan_(cartan_matrix(family, rank)) {
  positive_ = generate_positive_roots(cartan_);
  const int n = size();
  lookup_.reserve(positive_.size());
  for (int i = 0; i < n; ++i) lookup_.emplace(positive_[static_cast<std::size_t>(i)], i);

  sums_.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (auto k = index_of(root(a) + root(b))) sums_[static_cast<std::size_t>(a * n + b)] = *k;

  raises_.assign(static_cast<std::size_t>(n) * rank_, -1);
  for (int a = 0; a < n; ++a)
    for (int j = 0; j < rank_; ++j)
      if (auto k = index_of(root(a) + Root::simple(rank_, j)))
        raises_[static_cast<std::size_t>(a * rank_ + j)] = *k;

  pairings_.resize(n, rank_);
  for (int a = 0; a < n; ++a) pairings_.row(a) = coroot_pairings(root(a), cartan_);

  const Root h = borel::highest_root(*this);
  if (h != expected_highest_root(family_, rank_))
    throw StructuralError("highest root of " + label() + " is " + to_string(h) +
                          ", node numbering is inconsistent");
  highest_ = *index_of(h);
}

std::string RootSystem::label() const {
  return std::string(1, family_letter(family_)) + std::to_string(rank_);
}

std::vector<Root> RootSystem::simple_roots() const {
  std::vector<Root> out;
  for (int i = 0; i < rank_; ++i) out.push_back(Root::simple(rank_, i));
  return out;
}

std::optional<int> RootSystem::index_of(const Root& r) const {
  if (r.rank() != rank_) return std::nullopt;
  auto it = lookup_.find(r);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Root highest_root(const RootSystem& rs) {
  auto roots = rs.positive_roots();
  const int top = std::max_element(roots.begin(), roots.end(), [](const Root& a, const Root& b) {
                    return a.height() < b.height();
                  })->height();
  std::vector<int> maximal;  // indices of roots that cannot be raised
  int at_top = 0;
  for (int a = 0; a < rs.size(); ++a) {
    if (rs.root(a).height() == top) ++at_top;
    bool raisable = false;
    for (int j = 0; j < rs.rank(); ++j) raisable = raisable || rs.raise_index(a, j) >= 0;
    if (!raisable) maximal.push_back(a);
  }
  if (at_top != 1 || maximal.size() != 1 || rs.root(maximal.front()).height() != top)
    throw StructuralError("root system " + rs.label() + " has no unique highest root");
  return rs.root(maximal.front());
}

bool is_root(const Root& candidate, const RootSystem& rs) { return rs.contains(candidate); }

} // namespace borel

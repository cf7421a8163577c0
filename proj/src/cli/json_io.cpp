#include "borel/json_io.hpp"

#include "borel/errors.hpp"

namespace borel::json_io {

json to_json(const Root& r) {
  json out = json::array();
  for (int i = 0; i < r.rank(); ++i) out.push_back(r[i]);
  return out;
}

json roots_to_json(const std::vector<Root>& roots) {
  json out = json::array();
  for (const auto& r : roots) out.push_back(to_json(r));
  return out;
}

json kernel_to_json(const CartanKernelBasis& kernel) {
  json out = json::array();
  for (Eigen::Index i = 0; i < kernel.vectors.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < kernel.vectors.cols(); ++j) row.push_back(kernel.vectors(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

json counts_to_json(const DimensionCounts& counts) {
  json by_dim = json::object();
  for (const auto& [d, n] : counts.by_dimension) by_dim[std::to_string(d)] = n;
  return {{"by_dimension", by_dim},
          {"total_nonzero", counts.total_nonzero},
          {"total_with_zero", counts.total_with_zero},
          {"total_abelian_with_zero", counts.total_abelian}};
}

json ideal_to_json(const MonomialIdeal& ideal, const RootSystem& rs) {
  return {{"roots", roots_to_json(ideal.roots(rs))},
          {"dimension", ideal.dimension()},
          {"abelian", is_abelian(ideal, rs)}};
}

Root root_from_json(const json& j, const RootSystem& rs) {
  if (!j.is_array() || static_cast<int>(j.size()) != rs.rank())
    throw InvalidInput("expected a root vector of length " + std::to_string(rs.rank()) + ", got " + j.dump());
  Coefficients c(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number_integer()) throw InvalidInput("non-integer root entry in " + j.dump());
    c(i) = j[static_cast<std::size_t>(i)].get<int>();
  }
  Root r(c);
  if (!rs.contains(r)) throw InvalidInput(j.dump() + " is not a positive root of " + rs.label());
  return r;
}

std::vector<Root> roots_from_json(const json& j, const RootSystem& rs) {
  if (!j.is_array()) throw InvalidInput("expected an array of roots");
  std::vector<Root> out;
  for (const auto& r : j) out.push_back(root_from_json(r, rs));
  return out;
}

MonomialIdeal ideal_from_json(const json& j, const RootSystem& rs) {
  const json& roots = j.is_object() ? j.at("roots") : j;
  return MonomialIdeal::from_roots(roots_from_json(roots, rs), rs);
}

CartanKernelBasis kernel_from_json(const json& j, int rank) {
  if (!j.is_array()) throw InvalidInput("expected an array of kernel vectors");
  CartanKernelBasis out{IntMatrix<std::int64_t>(static_cast<Eigen::Index>(j.size()), rank)};
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != rank)
      throw InvalidInput("kernel vector has wrong length: " + j[i].dump());
    for (int k = 0; k < rank; ++k) out.vectors(static_cast<Eigen::Index>(i), k) = j[i][static_cast<std::size_t>(k)].get<std::int64_t>();
  }
  return out;
}

} // namespace borel::json_io

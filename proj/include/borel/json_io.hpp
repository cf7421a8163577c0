#ifndef BOREL_JSON_IO_HPP
#define BOREL_JSON_IO_HPP

// JSON encoding of domain values, shared by the CLI writer and readers of its
// output. The document layout is described in docs/output.schema.json.

#include "borel/ideals.hpp"
#include "borel/lattice.hpp"
#include "borel/root.hpp"
#include "borel/root_system.hpp"

#include <json.hpp>

#include <vector>

namespace borel::json_io {

using nlohmann::json;

/// Vector form, e.g. [1,2].
json to_json(const Root& r);
json roots_to_json(const std::vector<Root>& roots);
json kernel_to_json(const CartanKernelBasis& kernel);
json counts_to_json(const DimensionCounts& counts);

/// {"roots": [...], "dimension": d, "abelian": b}
json ideal_to_json(const MonomialIdeal& ideal, const RootSystem& rs);

/// Inverse readers. They validate against `rs` and throw InvalidInput.
Root root_from_json(const json& j, const RootSystem& rs);
std::vector<Root> roots_from_json(const json& j, const RootSystem& rs);
MonomialIdeal ideal_from_json(const json& j, const RootSystem& rs);
CartanKernelBasis kernel_from_json(const json& j, int rank);

} // namespace borel::json_io

#endif // BOREL_JSON_IO_HPP

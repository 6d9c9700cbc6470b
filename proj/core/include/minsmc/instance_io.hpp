#ifndef MINSMC_INSTANCE_IO_HPP_
#define MINSMC_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "minsmc/coverage.hpp"

namespace minsmc {

// Instance file format (JSON, UTF-8):
//   {"m": int, "universe_size": int, "k": int, "item_weights": [int]?,
//    "elements": [{"id": int, "cost": number, "covers": [int]}]}
// Elements sorted by id, covers ascending, keys emitted in exactly this
// order. Unknown fields are rejected. parse(serialize(x)) == x field for
// field.
CoverageInstance parse_instance(std::string_view text);
std::string serialize_instance(const CoverageInstance& inst);

CoverageInstance load_instance_file(const std::string& path);
void save_instance_file(const CoverageInstance& inst, const std::string& path);

}  // namespace minsmc

#endif  // MINSMC_INSTANCE_IO_HPP_

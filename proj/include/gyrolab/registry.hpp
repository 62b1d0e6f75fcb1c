#pragma once

#include <optional>
#include <string>

#include "gyrolab/contract.hpp"
#include "gyrolab/topology.hpp"

namespace gyrolab {

// Builtin model names: "mobius", "einstein", "z<n>", "k16",
// "product:<a>,<b>,...". Anything else is treated as a .gyro file path.
// Builtins are generated, not shipped as files, except k16 which loads from
// the data directory.
GyrogroupContract resolve_model(const std::string& name, Tolerance tol = {},
                                const std::optional<std::string>& data_dir = {});

// "sierpinski", "discrete<n>", "indiscrete<n>", or a .topo file path.
FiniteTopology resolve_topology(const std::string& name);

// Search order: explicit dir, $GYROLAB_DATA_DIR, ./data, compiled-in default.
std::optional<std::string> find_data_file(const std::string& filename,
                                          const std::optional<std::string>& dir = {});

}  // namespace gyrolab

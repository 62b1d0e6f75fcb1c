#pragma once

#include <json.hpp>

namespace gyrolab {

// ordered_json keeps insertion order, so identical runs emit identical bytes.
using json = nlohmann::ordered_json;

}  // namespace gyrolab

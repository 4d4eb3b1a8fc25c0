#pragma once

#include <string>
#include <utility>
#include <vector>

namespace relalg::detail {

// (name, JSON text) for every model fixture compiled into the library.
const std::vector<std::pair<std::string, std::string>>& bundled_model_sources();

}  // namespace relalg::detail

#pragma once

// Private to pdae_core: nlohmann/json is not part of the installed interface.

#include <json.hpp>

#include "pdae/verification.hpp"

namespace pdae::detail {

using Json = nlohmann::ordered_json;

Json report_to_json(const verification::PropertyReport& report);

}  // namespace pdae::detail

#pragma once

#include <json.hpp>

#include "jmatrix/kinematics.hpp"

namespace jmatrix {

ChannelConfig channel_from_json(const nlohmann::json& j);
nlohmann::json channel_to_json(const ChannelConfig& ch);

}  // namespace jmatrix

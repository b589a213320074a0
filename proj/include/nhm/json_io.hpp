#pragma once

#include <json.hpp>

#include "nhm/kernel.hpp"

namespace nhm {

using Json = nlohmann::ordered_json;

/// Points, sets and opens are embedded as strings in the text syntax.
Json to_json(const Move& m);
Json to_json(const HomeoWord& w);

/// `{kind, payload}`.
Json to_json(const Certificate& c);

}  // namespace nhm

#pragma once

#include <initializer_list>
#include <json.hpp>
#include <string_view>

#include "dal/explore.hpp"
#include "dal/model.hpp"

namespace dal {

using Json = nlohmann::ordered_json;

/// {"omega_c", "j", "j_c", "gamma", "gamma_c"}; all five required. An
/// "omega" key is accepted only with the value 1. Any other key is rejected
/// with InvalidParams.
ModelParams params_from_json(const Json& j);
Json to_json(const ModelParams& p);

/// Template form used by sweeps and scans: the keys in `swept` are supplied
/// by the caller's axis, must not appear in `j`, and are left at their
/// ModelParams defaults. Everything else is required as above.
ModelParams template_from_json(const Json& j, std::initializer_list<std::string_view> swept);
Json template_to_json(const ModelParams& p, std::initializer_list<std::string_view> swept);

/// {"j": [lo, hi], "j_c": [...], "omega_c": [...], "gamma_c": [...], "gamma": g}.
/// Missing keys keep the defaults of Bounds.
Bounds bounds_from_json(const Json& j);
Json to_json(const Bounds& b);

Json to_json(const OptResult& r);

}  // namespace dal

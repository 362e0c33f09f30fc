#include "dal/serialization.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "dal/error.hpp"

namespace dal {

namespace {

double number_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorKind::InvalidParams, std::string("missing key '") + key + "'");
  if (!it->is_number()) {
    throw Error(ErrorKind::InvalidParams, std::string("key '") + key + "' must be a number");
  }
  return it->get<double>();
}

Interval interval_field(const Json& j, const char* key, Interval fallback) {
  const auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
    throw Error(ErrorKind::InvalidParams, std::string("key '") + key + "' must be [lo, hi]");
  }
  return {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

constexpr std::array<const char*, 5> kParamKeys = {"omega_c", "j", "j_c", "gamma", "gamma_c"};

double* slot(ModelParams& p, std::string_view key) {
  if (key == "omega_c") return &p.omega_c;
  if (key == "j") return &p.j;
  if (key == "j_c") return &p.j_c;
  if (key == "gamma") return &p.gamma;
  if (key == "gamma_c") return &p.gamma_c;
  return nullptr;
}

bool listed(std::initializer_list<std::string_view> keys, std::string_view key) {
  return std::find(keys.begin(), keys.end(), key) != keys.end();
}

}  // namespace

ModelParams template_from_json(const Json& j, std::initializer_list<std::string_view> swept) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidParams, "model parameters must be a JSON object");
  ModelParams p;
  for (const auto& [key, value] : j.items()) {
    if (key == "omega") {
      if (!value.is_number() || value.get<double>() != 1.0) {
        throw Error(ErrorKind::InvalidParams, "omega is fixed to 1 (dimensionless units)");
      }
      continue;
    }
    if (slot(p, key) == nullptr) {
      throw Error(ErrorKind::InvalidParams, "unknown model parameter '" + key + "'");
    }
    if (listed(swept, key)) {
      throw Error(ErrorKind::InvalidParams,
                  "model parameter '" + key + "' is set by the axis and must not be given");
    }
  }
  for (const char* key : kParamKeys) {
    if (!listed(swept, key)) *slot(p, key) = number_field(j, key);
  }
  p.validate();
  return p;
}

Json template_to_json(const ModelParams& p, std::initializer_list<std::string_view> swept) {
  Json out = Json::object();
  ModelParams copy = p;
  for (const char* key : kParamKeys) {
    if (!listed(swept, key)) out[key] = *slot(copy, key);
  }
  return out;
}

ModelParams params_from_json(const Json& j) { return template_from_json(j, {}); }

Json to_json(const ModelParams& p) { return template_to_json(p, {}); }

Bounds bounds_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidParams, "bounds must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "j" && key != "j_c" && key != "omega_c" && key != "gamma_c" && key != "gamma") {
      throw Error(ErrorKind::InvalidParams, "unknown bounds key '" + key + "'");
    }
  }
  Bounds b;
  b.j = interval_field(j, "j", b.j);
  b.j_c = interval_field(j, "j_c", b.j_c);
  b.omega_c = interval_field(j, "omega_c", b.omega_c);
  b.gamma_c = interval_field(j, "gamma_c", b.gamma_c);
  if (j.contains("gamma")) b.gamma = number_field(j, "gamma");
  b.validate();
  return b;
}

Json to_json(const Bounds& b) {
  return Json{{"j", {b.j.lo, b.j.hi}},
              {"j_c", {b.j_c.lo, b.j_c.hi}},
              {"omega_c", {b.omega_c.lo, b.omega_c.hi}},
              {"gamma_c", {b.gamma_c.lo, b.gamma_c.hi}},
              {"gamma", b.gamma}};
}

Json to_json(const OptResult& r) {
  Json history = Json::array();
  for (const auto& rec : r.history) {
    history.push_back(Json{{"seed", to_json(rec.seed)},
                           {"converged", to_json(rec.converged)},
                           {"negativity", rec.value},
                           {"evaluations", rec.evaluations}});
  }
  return Json{{"best_params", to_json(r.best_params)},
              {"best_negativity", r.best_n},
              {"evaluations", r.evaluations},
              {"starts", r.starts},
              {"history", std::move(history)}};
}

}  // namespace dal

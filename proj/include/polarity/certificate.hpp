#pragma once

#include <string>

#include <json.hpp>

namespace polarity {

using Json = nlohmann::ordered_json;

// Re-runnable verdict record. A fail always carries a concrete witness that
// the named check reproduces.
struct Certificate {
  std::string claim;
  Json params = Json::object();
  bool pass = false;
  Json witness;  // null unless there is something to show
  Json stats = Json::object();

  Json to_json() const {
    Json j;
    j["claim"] = claim;
    j["params"] = params;
    j["verdict"] = pass ? "pass" : "fail";
    j["witness"] = witness.is_null() ? Json() : witness;
    j["stats"] = stats;
    return j;
  }
};

}  // namespace polarity

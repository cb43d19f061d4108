#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace mvt::app {

struct Scenario {
  std::string name;
  std::string command;  // subcommand that runs it
  std::string summary;
  nlohmann::json spec;
};

/// Every builtin, in listing order.
const std::vector<Scenario>& builtin_scenarios();
/// nullptr when unknown.
const Scenario* find_scenario(const std::string& name);

}  // namespace mvt::app

#include "mvt/app/report.hpp"

#include "mvt/grid_io.hpp"

namespace mvt::app {

void Report::add(const std::string& key, double v) { lines_.emplace_back(key, format_real(v)); }
void Report::add(const std::string& key, std::size_t v) { lines_.emplace_back(key, std::to_string(v)); }
void Report::add(const std::string& key, int v) { lines_.emplace_back(key, std::to_string(v)); }
void Report::add(const std::string& key, bool v) { lines_.emplace_back(key, v ? "true" : "false"); }
void Report::add(const std::string& key, const std::string& v) { lines_.emplace_back(key, v); }

void Report::add(const std::string& key, const std::vector<double>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += format_real(v[k]);
  }
  lines_.emplace_back(key, s + "]");
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + " = " + v + "\n";
  return out;
}

std::string Report::value(const std::string& key) const {
  for (const auto& [k, v] : lines_)
    if (k == key) return v;
  return {};
}

}  // namespace mvt::app

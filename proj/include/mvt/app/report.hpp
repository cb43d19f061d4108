#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mvt::app {

/// Ordered "key = value" lines. Reals print with 17 significant digits, so
/// identical inputs give byte-identical text.
class Report {
 public:
  void add(const std::string& key, double v);
  void add(const std::string& key, std::size_t v);
  void add(const std::string& key, int v);
  void add(const std::string& key, bool v);
  void add(const std::string& key, const std::string& v);
  void add(const std::string& key, const char* v) { add(key, std::string(v)); }
  void add(const std::string& key, const std::vector<double>& v);

  [[nodiscard]] std::string str() const;
  [[nodiscard]] const std::vector<std::pair<std::string, std::string>>& entries() const noexcept { return lines_; }
  /// Value of the first line with this key, or empty.
  [[nodiscard]] std::string value(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

}  // namespace mvt::app

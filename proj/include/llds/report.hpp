#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace llds {

// Flat ordered key/value report.  Every sampled result carries its seed and
// trial count; emission order is insertion order, so identical runs emit
// byte-identical text.
class Report {
public:
  void put(const std::string& key, const std::string& value) { kv_.push_back({key, value}); }
  void put(const std::string& key, const char* value) { kv_.push_back({key, value}); }
  template <class T>
    requires std::is_integral_v<T>
  void put(const std::string& key, T v) {
    put(key, std::to_string(v));
  }
  void put_bool(const std::string& key, bool v) { put(key, v ? "true" : "false"); }

  const std::vector<std::pair<std::string, std::string>>& items() const { return kv_; }
  std::string tsv() const;
  std::string json() const;

private:
  std::vector<std::pair<std::string, std::string>> kv_;
};

std::uint64_t fnv1a64(const std::string& data);
std::string hex64(std::uint64_t v);

}  // namespace llds

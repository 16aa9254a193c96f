#include "llds/report.hpp"

#include <json.hpp>

namespace llds {

std::string Report::tsv() const {
  std::string out;
  for (const auto& [k, v] : kv_) {
    out += k;
    out += '\t';
    out += v;
    out += '\n';
  }
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : kv_) {
    if (j.contains(k)) continue;  // first write wins; keys are unique in practice
    j[k] = v;
  }
  return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

}  // namespace llds

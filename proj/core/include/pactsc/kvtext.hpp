#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace pactsc {

// Flat "key = value" text document, one pair per line, '#' starts a
// comment. Used for configs, phantoms, schedules, manifests and bench
// reports. Keys keep insertion order when serialized.
class KvDoc {
 public:
  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double value);
  void set_int(const std::string& key, std::int64_t value);
  void set_u64(const std::string& key, std::uint64_t value);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;  // throws if absent
  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::uint64_t get_u64(const std::string& key) const;

  const std::vector<std::string>& keys() const { return order_; }

  std::string serialize() const;
  static KvDoc parse(const std::string& text);

  void save(const std::filesystem::path& path) const;
  static KvDoc load(const std::filesystem::path& path);

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> order_;
};

}  // namespace pactsc

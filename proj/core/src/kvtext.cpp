#include "pactsc/kvtext.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pactsc {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void KvDoc::set(const std::string& key, const std::string& value) {
  if (values_.find(key) == values_.end()) order_.push_back(key);
  values_[key] = value;
}

void KvDoc::set_double(const std::string& key, double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  set(key, os.str());
}

void KvDoc::set_int(const std::string& key, std::int64_t value) {
  set(key, std::to_string(value));
}

void KvDoc::set_u64(const std::string& key, std::uint64_t value) {
  set(key, std::to_string(value));
}

bool KvDoc::has(const std::string& key) const { return values_.count(key) != 0; }

const std::string& KvDoc::get(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw std::runtime_error("kvtext: missing key '" + key + "'");
  return it->second;
}

std::string KvDoc::get_or(const std::string& key, const std::string& fallback) const {
  auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KvDoc::get_double(const std::string& key) const {
  const std::string& v = get(key);
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw std::runtime_error("kvtext: key '" + key + "' is not a number: '" + v + "'");
  }
}

std::int64_t KvDoc::get_int(const std::string& key) const {
  const std::string& v = get(key);
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw std::runtime_error("kvtext: key '" + key + "' is not an integer: '" + v + "'");
  return out;
}

std::uint64_t KvDoc::get_u64(const std::string& key) const {
  const std::string& v = get(key);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw std::runtime_error("kvtext: key '" + key + "' is not an unsigned integer: '" + v + "'");
  return out;
}

std::string KvDoc::serialize() const {
  std::ostringstream os;
  for (const auto& key : order_) os << key << " = " << values_.at(key) << "\n";
  return os.str();
}

KvDoc KvDoc::parse(const std::string& text) {
  KvDoc doc;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("kvtext: line " + std::to_string(lineno) + " has no '='");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("kvtext: line " + std::to_string(lineno) + " has empty key");
    doc.set(key, value);
  }
  return doc;
}

void KvDoc::save(const std::filesystem::path& path) const {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("kvtext: cannot open '" + tmp.string() + "' for write");
    os << serialize();
    if (!os) throw std::runtime_error("kvtext: write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

KvDoc KvDoc::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("kvtext: cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return parse(os.str());
}

}  // namespace pactsc

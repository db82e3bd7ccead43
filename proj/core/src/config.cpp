#include "xpm/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "xpm/errors.hpp"

namespace xpm {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

KeyValues KeyValues::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config file: " + path);
  return parse(in, path);
}

KeyValues KeyValues::parse(std::istream& in, const std::string& source_name) {
  KeyValues kv;
  kv.source_ = source_name;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const size_t eq = body.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << source_name << ":" << line_no << ": expected 'key = value'";
      throw validation_error(msg.str());
    }
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty() || value.empty()) {
      std::ostringstream msg;
      msg << source_name << ":" << line_no << ": empty key or value";
      throw validation_error(msg.str());
    }
    if (kv.entries_.count(key)) {
      std::ostringstream msg;
      msg << source_name << ":" << line_no << ": duplicate key '" << key
          << "' (first defined at line " << kv.entries_[key].line << ")";
      throw validation_error(msg.str());
    }
    kv.entries_[key] = Entry{value, line_no};
  }
  return kv;
}

bool KeyValues::has(const std::string& key) const {
  return entries_.count(key) != 0;
}

const std::string& KeyValues::raw(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end())
    throw validation_error(source_ + ": missing key '" + key + "'");
  return it->second.value;
}

void KeyValues::fail(const std::string& key, const std::string& what) const {
  auto it = entries_.find(key);
  std::ostringstream msg;
  msg << source_;
  if (it != entries_.end()) msg << ":" << it->second.line;
  msg << ": key '" << key << "': " << what;
  throw validation_error(msg.str());
}

double KeyValues::get_double(const std::string& key) const {
  const std::string& v = raw(key);
  double out = 0.0;
  const char* begin = v.data();
  const char* end = begin + v.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) fail(key, "not a number: '" + v + "'");
  return out;
}

std::int64_t KeyValues::get_int(const std::string& key) const {
  const std::string& v = raw(key);
  std::int64_t out = 0;
  const char* begin = v.data();
  const char* end = begin + v.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr != end) fail(key, "not an integer: '" + v + "'");
  return out;
}

std::string KeyValues::get_string(const std::string& key) const {
  return raw(key);
}

std::vector<std::string> KeyValues::keys() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [k, _] : entries_) out.push_back(k);
  return out;
}

}  // namespace xpm

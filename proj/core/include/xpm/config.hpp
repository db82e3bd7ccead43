#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace xpm {

// Flat key-value configuration file:
//
//   # comment
//   v1 = 2.0
//   pot.kind = gaussian
//
// Keys may contain dots; values run to end of line (inline # starts a
// comment). Parse errors and duplicate keys throw validation_error with a
// line diagnostic.
class KeyValues {
 public:
  KeyValues() = default;

  static KeyValues parse_file(const std::string& path);
  static KeyValues parse(std::istream& in, const std::string& source_name);

  bool has(const std::string& key) const;
  const std::string& raw(const std::string& key) const;

  // Typed getters; conversion failures throw validation_error naming the
  // key and source line.
  double get_double(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  std::string get_string(const std::string& key) const;

  std::vector<std::string> keys() const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  std::string source_;
  std::map<std::string, Entry> entries_;

  [[noreturn]] void fail(const std::string& key, const std::string& what) const;
};

}  // namespace xpm

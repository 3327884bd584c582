#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "hybisect/rational.hpp"

namespace hybisect {

inline constexpr const char* kVersion = "0.1.0";

// Line-structured records: one record per line, "<type> key=value key=value".
// Field order is insertion order, so identical configurations produce
// byte-identical lines. Every record carries the library version so any line
// can be re-derived in isolation. Timing and other non-reproducible data must
// go to comment() lines instead.
class Record {
 public:
  explicit Record(std::string type) : line_(std::move(type)) {
    add("version", kVersion);
  }

  Record& add(const std::string& key, const std::string& value) {
    line_ += " " + key + "=" + value;
    return *this;
  }
  Record& add(const std::string& key, const char* value) {
    return add(key, std::string(value));
  }
  Record& add(const std::string& key, long long value) {
    return add(key, std::to_string(value));
  }
  Record& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
  Record& add(const std::string& key, std::uint64_t value) {
    return add(key, std::to_string(value));
  }
  Record& add(const std::string& key, bool value) {
    return add(key, std::string(value ? "true" : "false"));
  }
  Record& add(const std::string& key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return add(key, std::string(buf));
  }
  Record& add(const std::string& key, const Rat& value) {
    std::ostringstream os;
    os << value;
    return add(key, os.str());
  }
  Record& add(const std::string& key, const std::vector<int>& values) {
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) joined += ",";
      joined += std::to_string(values[i]);
    }
    return add(key, joined.empty() ? std::string("-") : joined);
  }

  const std::string& line() const { return line_; }

 private:
  std::string line_;
};

inline std::string comment(const std::string& text) { return "# " + text; }

}  // namespace hybisect

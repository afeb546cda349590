#ifndef SEMIPERIODIC_REPORT_REPORT_HPP
#define SEMIPERIODIC_REPORT_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "semiperiodic/config.hpp"

namespace semiperiodic::report {

using Value = std::variant<std::int64_t, double, Complex, std::string, bool>;

/// Ordered key/value record; insertion order is the serialization order.
class Record {
 public:
  Record& set(std::string key, Value value);
  Record& set(std::string key, int value) { return set(std::move(key), Value(std::int64_t{value})); }
  Record& set(std::string key, double value) { return set(std::move(key), Value(value)); }
  Record& set(std::string key, bool value) { return set(std::move(key), Value(value)); }
  Record& set(std::string key, const char* value) { return set(std::move(key), Value(std::string(value))); }

  const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
  const Value* find(const std::string& key) const;

 private:
  std::vector<std::pair<std::string, Value>> fields_;
};

struct Report {
  std::string kind;
  SpectralConfig config;
  Record params;
  std::vector<Record> rows;
  int pass = 0;
  int fail = 0;
};

/// "%.17g"; non-finite values become "inf", "-inf" or "nan".
std::string format_double(double v);

/// { "kind", "config": {"a","b","k"}, "params", "rows", "summary": {"pass","fail"} }.
/// Complex values serialize as {"re": x, "im": y}; non-finite doubles as strings.
std::string to_json(const Report& report);

/// Header line with the union of row keys (first-seen order) followed by one
/// line per row. Complex fields expand to <key>_re,<key>_im.
std::string to_csv(const Report& report);

}  // namespace semiperiodic::report

#endif  // SEMIPERIODIC_REPORT_REPORT_HPP

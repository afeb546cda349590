#include "semiperiodic/report/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace semiperiodic::report {

Record& Record::set(std::string key, Value value) {
  for (auto& [k, v] : fields_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  fields_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const Value* Record::find(const std::string& key) const {
  for (const auto& [k, v] : fields_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_double(double v) {
  return std::isfinite(v) ? format_double(v) : json_string(format_double(v));
}

std::string json_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return json_double(x);
        } else if constexpr (std::is_same_v<T, Complex>) {
          return "{\"re\": " + json_double(x.real()) + ", \"im\": " + json_double(x.imag()) + "}";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return json_string(x);
        } else {
          return x ? "true" : "false";
        }
      },
      v);
}

void json_record(std::ostringstream& os, const Record& r) {
  os << '{';
  bool first = true;
  for (const auto& [k, v] : r.fields()) {
    os << (first ? "" : ", ") << json_string(k) << ": " << json_value(v);
    first = false;
  }
  os << '}';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const Report& report) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"kind\": " << json_string(report.kind) << ",\n";
  os << "  \"config\": {\"a\": " << format_double(report.config.a()) << ", \"b\": " << format_double(report.config.b())
     << ", \"k\": " << format_double(report.config.k()) << "},\n";
  os << "  \"params\": ";
  json_record(os, report.params);
  os << ",\n  \"rows\": [";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    os << (i ? ",\n    " : "\n    ");
    json_record(os, report.rows[i]);
  }
  os << (report.rows.empty() ? "],\n" : "\n  ],\n");
  os << "  \"summary\": {\"pass\": " << report.pass << ", \"fail\": " << report.fail << "}\n";
  os << "}\n";
  return os.str();
}

std::string to_csv(const Report& report) {
  // column key -> whether it holds complex values anywhere
  std::vector<std::pair<std::string, bool>> columns;
  for (const auto& row : report.rows) {
    for (const auto& [k, v] : row.fields()) {
      const bool is_complex = std::holds_alternative<Complex>(v);
      auto it = std::find_if(columns.begin(), columns.end(), [&](const auto& c) { return c.first == k; });
      if (it == columns.end()) {
        columns.emplace_back(k, is_complex);
      } else {
        it->second = it->second || is_complex;
      }
    }
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, is_complex] : columns) {
    if (is_complex) {
      os << (first ? "" : ",") << csv_escape(k + "_re") << ',' << csv_escape(k + "_im");
    } else {
      os << (first ? "" : ",") << csv_escape(k);
    }
    first = false;
  }
  os << '\n';
  for (const auto& row : report.rows) {
    first = true;
    for (const auto& [k, is_complex] : columns) {
      const Value* v = row.find(k);
      std::string cell, cell_im;
      if (v != nullptr) {
        std::visit(
            [&](const auto& x) {
              using T = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<T, std::int64_t>) {
                cell = std::to_string(x);
              } else if constexpr (std::is_same_v<T, double>) {
                cell = format_double(x);
                if (is_complex) cell_im = "0";
              } else if constexpr (std::is_same_v<T, Complex>) {
                cell = format_double(x.real());
                cell_im = format_double(x.imag());
              } else if constexpr (std::is_same_v<T, std::string>) {
                cell = csv_escape(x);
              } else {
                cell = x ? "true" : "false";
              }
            },
            *v);
      }
      os << (first ? "" : ",") << cell;
      if (is_complex) os << ',' << cell_im;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace semiperiodic::report

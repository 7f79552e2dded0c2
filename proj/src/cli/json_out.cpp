// Copyright 2026 The logent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "logent/cli/json_out.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace logent::cli {

namespace {

void indent(std::ostream& out, int depth) {
  for (int i = 0; i < depth; ++i) out << "  ";
}

void write_value(std::ostream& out, const nlohmann::json& v, int depth) {
  using Type = nlohmann::json::value_t;
  switch (v.type()) {
    case Type::null:
    case Type::discarded:
      out << "null";
      return;
    case Type::boolean:
      out << (v.get<bool>() ? "true" : "false");
      return;
    case Type::number_integer:
      out << v.get<std::int64_t>();
      return;
    case Type::number_unsigned:
      out << v.get<std::uint64_t>();
      return;
    case Type::number_float:
      out << format_double(v.get<double>());
      return;
    case Type::string:
    case Type::binary:
      out << v.dump();
      return;
    case Type::array: {
      if (v.empty()) {
        out << "[]";
        return;
      }
      // Short arrays of scalars stay on one line: [re, im] pairs, eigenvalues.
      bool flat = v.size() <= 8;
      for (const auto& e : v) flat = flat && !e.is_structured();
      if (flat) {
        out << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out << ", ";
          write_value(out, v[i], depth);
        }
        out << ']';
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        indent(out, depth + 1);
        write_value(out, v[i], depth + 1);
        out << (i + 1 < v.size() ? ",\n" : "\n");
      }
      indent(out, depth);
      out << ']';
      return;
    }
    case Type::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        indent(out, depth + 1);
        out << nlohmann::json(it.key()).dump() << ": ";
        write_value(out, it.value(), depth + 1);
        out << (i + 1 < v.size() ? ",\n" : "\n");
      }
      indent(out, depth);
      out << '}';
      return;
    }
  }
}

}  // namespace

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  std::string s(buf);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void write_json(std::ostream& out, const nlohmann::json& value) {
  write_value(out, value, 0);
  out << '\n';
}

std::string to_json_string(const nlohmann::json& value) {
  std::ostringstream s;
  write_json(s, value);
  return s.str();
}

}  // namespace logent::cli

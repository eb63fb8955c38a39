// Copyright Advocate Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "advocate/errors.hpp"

namespace advocate {

using Json = nlohmann::json;

namespace detail {

inline void canonical_escape_string(std::string_view s, std::string& out) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          static const char* digits = "0123456789abcdef";
          out += "\\u00";
          out.push_back(digits[c >> 4]);
          out.push_back(digits[c & 0x0f]);
        } else {
          out.push_back(static_cast<char>(c));  // UTF-8 passes through unescaped
        }
    }
  }
  out.push_back('"');
}

inline void canonical_write(const Json& value, std::string& out) {
  switch (value.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += value.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(value.get<int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(value.get<uint64_t>());
      break;
    case Json::value_t::number_float:
      throw Error(ErrorCode::NonCanonicalNumber,
                  "float-typed number has no canonical rendering");
    case Json::value_t::string:
      canonical_escape_string(value.get_ref<const std::string&>(), out);
      break;
    case Json::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& item : value) {
        if (!first) out.push_back(',');
        first = false;
        canonical_write(item, out);
      }
      out.push_back(']');
      break;
    }
    case Json::value_t::object: {
      // nlohmann objects iterate in key order (std::map over byte-wise
      // std::string comparison), which for UTF-8 keys equals code-point order.
      out.push_back('{');
      bool first = true;
      for (auto it = value.begin(); it != value.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        canonical_escape_string(it.key(), out);
        out.push_back(':');
        canonical_write(it.value(), out);
      }
      out.push_back('}');
      break;
    }
    default:
      throw Error(ErrorCode::NonCanonicalNumber, "unsupported JSON value type");
  }
}

}  // namespace detail

// Deterministic UTF-8 encoding of a JSON value: lexicographically sorted
// object keys, no insignificant whitespace, shortest-form integers, minimal
// string escaping. Floats are rejected — decimal measurements travel as
// strings so canonical bytes never depend on float formatting.
inline std::string canonical_bytes(const Json& value) {
  std::string out;
  detail::canonical_write(value, out);
  return out;
}

// Parse helper that refuses documents containing float-typed numbers.
inline Json parse_canonical_json(std::string_view text) {
  Json value = Json::parse(text, nullptr, true);
  return value;
}

}  // namespace advocate

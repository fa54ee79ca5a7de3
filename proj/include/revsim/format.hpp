// Copyright 2026 The revsim Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef REVSIM_FORMAT_HPP
#define REVSIM_FORMAT_HPP

#include <cstdio>
#include <string>

namespace revsim {

// All floating-point output goes through this: fixed 6 decimal digits, so
// identical runs produce identical bytes.
inline std::string format_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  return out;
}

}  // namespace revsim

#endif  // REVSIM_FORMAT_HPP

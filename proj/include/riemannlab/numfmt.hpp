// Copyright 2026 The riemannlab Authors
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

#ifndef RIEMANNLAB_NUMFMT_HPP_
#define RIEMANNLAB_NUMFMT_HPP_

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riemannlab {

// Shortest decimal form that round-trips to the same double.  Locale
// independent ("." decimal separator), used by every CSV/JSON emitter so
// that identical inputs produce byte-identical files.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t v) {
  char buf[24];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Parses a full token as a double; throws std::invalid_argument on
// anything but a complete, valid number.
inline double parse_double(std::string_view token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw std::invalid_argument("malformed number: '" + std::string(token) +
                                "'");
  }
  return v;
}

}  // namespace riemannlab

#endif  // RIEMANNLAB_NUMFMT_HPP_

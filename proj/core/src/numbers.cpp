// Copyright 2026 The Authors.
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

#include "semimat/numbers.hpp"

#include <cctype>

namespace semimat {

std::vector<int> elements(Subset x) {
  std::vector<int> out;
  out.reserve(popcount(x));
  while (x != 0) {
    out.push_back(lowest(x));
    x &= x - 1;
  }
  return out;
}

Subset subset_of(const std::vector<int>& elems) {
  Subset x = 0;
  for (int e : elems) {
    if (e < 0 || e >= kMaxGroundSize) {
      throw InvalidInput("element index " + std::to_string(e) +
                         " outside 0.." + std::to_string(kMaxGroundSize - 1));
    }
    x |= bit(e);
  }
  return x;
}

std::string subset_string(Subset x) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(x)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string rational_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  if (slash == std::string_view::npos) return Rational(parse_integer(num));
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den)) {
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  }
  BigInt d = parse_integer(den);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

}  // namespace semimat

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

#ifndef SEMIMAT_NUMBERS_HPP_
#define SEMIMAT_NUMBERS_HPP_

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semimat {

using BigInt = mpz_class;
using Rational = mpq_class;

// A subset of a ground set {0, ..., 19}, one bit per element.
using Subset = std::uint32_t;

// Hard cap on ground-set size (bitmask width).
inline constexpr int kMaxGroundSize = 20;
// Cap for operations that enumerate all 2^E subsets.
inline constexpr int kMaxEnumeratedGround = 16;

// Base of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or a violated operation precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A size cap or enumeration budget was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

inline int popcount(Subset x) { return std::popcount(x); }

inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

inline Subset full_set(int n) {
  return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
}

inline Subset bit(int e) { return Subset{1} << e; }

inline bool has(Subset x, int e) { return ((x >> e) & 1U) != 0; }

// Smallest element of a nonempty subset.
inline int lowest(Subset x) { return std::countr_zero(x); }

// Number of bits needed to index all subsets of `ground`.
inline int width(Subset ground) { return std::bit_width(ground); }

std::vector<int> elements(Subset x);

Subset subset_of(const std::vector<int>& elems);

// "{0,2,3}"
std::string subset_string(Subset x);

// Canonical rational string: "p" when integral, otherwise "p/q" in lowest terms.
std::string rational_string(const Rational& x);

// Parses "p", "-p", or "p/q". Throws InvalidInput on malformed text or q == 0.
Rational parse_rational(std::string_view text);

// (-1)^k as a BigInt.
inline BigInt sign_power(int k) { return (k % 2 == 0) ? BigInt(1) : BigInt(-1); }

}  // namespace semimat

#endif  // SEMIMAT_NUMBERS_HPP_

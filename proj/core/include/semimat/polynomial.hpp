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

#ifndef SEMIMAT_POLYNOMIAL_HPP_
#define SEMIMAT_POLYNOMIAL_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "semimat/numbers.hpp"

namespace semimat {

// Integer polynomial in one variable t. Zero coefficients are never stored,
// so the zero polynomial has an empty term map.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  // Implicit so that integers embed as constants.
  UniPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  UniPoly(int constant) : UniPoly(BigInt(constant)) {}  // NOLINT

  static UniPoly monomial(int degree, const BigInt& coefficient = 1);
  // The polynomial t.
  static UniPoly variable() { return monomial(1); }
  // Coefficients listed from the leading term down to the constant term.
  static UniPoly from_descending(const std::vector<BigInt>& coefficients);

  bool is_zero() const { return terms_.empty(); }
  // kZeroDegree for the zero polynomial.
  int degree() const;
  BigInt coefficient(int degree) const;
  const std::map<int, BigInt>& terms() const { return terms_; }
  // Dense coefficients from degree() down to 0; empty for zero.
  std::vector<BigInt> descending() const;

  Rational evaluate(const Rational& x) const;
  // this(inner(t)).
  UniPoly compose(const UniPoly& inner) const;
  UniPoly pow(int exponent) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(int degree, const BigInt& coefficient);

  // Human-readable form, e.g. "t^2 - 4*t + 6".
  std::string to_string(const std::string& var = "t") const;

 private:
  std::map<int, BigInt> terms_;
};

// Integer polynomial in two variables t and s. Keys are (t-degree, s-degree).
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;

  BiPoly() = default;
  BiPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  BiPoly(int constant) : BiPoly(BigInt(constant)) {}  // NOLINT

  static BiPoly monomial(int t_degree, int s_degree,
                         const BigInt& coefficient = 1);
  static BiPoly t() { return monomial(1, 0); }
  static BiPoly s() { return monomial(0, 1); }
  // Embeds p(t) or p(s).
  static BiPoly in_t(const UniPoly& p);
  static BiPoly in_s(const UniPoly& p);
  // p(t*s) as a bivariate polynomial.
  static BiPoly of_product(const UniPoly& p);

  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int t_degree, int s_degree) const;
  const std::map<Exponents, BigInt>& terms() const { return terms_; }

  // Substitutes t = value, leaving a polynomial in s (still stored as BiPoly).
  BiPoly at_t(const BigInt& value) const;
  BiPoly at_s(const BigInt& value) const;
  BiPoly pow(int exponent) const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  BiPoly operator-() const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(int t_degree, int s_degree, const BigInt& coefficient);

  std::string to_string() const;

 private:
  std::map<Exponents, BigInt> terms_;
};

Rational eval_uni(const UniPoly& p, const Rational& x);

// (-1)^sign_exponent * p(t_image, s_image), fully expanded.
UniPoly specialize_bi(const BiPoly& p, const UniPoly& t_image,
                      const UniPoly& s_image, int sign_exponent);

// Unsigned Whitney numbers of the first kind: w_0..w_rank.
struct WhitneySeq {
  std::vector<BigInt> values;
  int rank = 0;

  friend bool operator==(const WhitneySeq&, const WhitneySeq&) = default;
};

// w_i = (-1)^i [t^{rank-i}] chi. Throws InvalidInput if deg chi > rank or a
// coefficient lies outside the w_0..w_rank window.
WhitneySeq whitney_sequence(const UniPoly& chi, int rank);

// Rebuilds sum_i (-1)^i w_i t^{rank-i}.
UniPoly from_whitney(const WhitneySeq& w);

struct ShapeReport {
  bool alternating_nonzero = false;  // every w_i > 0 and w_0 == 1
  bool unimodal = false;
  bool log_concave = false;

  friend bool operator==(const ShapeReport&, const ShapeReport&) = default;
};

ShapeReport shape_report(const WhitneySeq& w);

}  // namespace semimat

#endif  // SEMIMAT_POLYNOMIAL_HPP_

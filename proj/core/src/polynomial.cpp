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

#include "semimat/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace semimat {

UniPoly::UniPoly(BigInt constant) { add_term(0, constant); }

UniPoly UniPoly::monomial(int degree, const BigInt& coefficient) {
  if (degree < 0) throw InvalidInput("negative exponent");
  UniPoly p;
  p.add_term(degree, coefficient);
  return p;
}

UniPoly UniPoly::from_descending(const std::vector<BigInt>& coefficients) {
  UniPoly p;
  const int n = static_cast<int>(coefficients.size());
  for (int i = 0; i < n; ++i) p.add_term(n - 1 - i, coefficients[i]);
  return p;
}

int UniPoly::degree() const {
  return terms_.empty() ? kZeroDegree : terms_.rbegin()->first;
}

BigInt UniPoly::coefficient(int degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<BigInt> UniPoly::descending() const {
  std::vector<BigInt> out;
  for (int d = degree(); d >= 0; --d) out.push_back(coefficient(d));
  return out;
}

void UniPoly::add_term(int degree, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(degree, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational UniPoly::evaluate(const Rational& x) const {
  // Horner over the dense range.
  Rational acc = 0;
  for (int d = degree(); d >= 0; --d) {
    acc = acc * x + Rational(coefficient(d));
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (int d = degree(); d >= 0; --d) {
    acc *= inner;
    acc += UniPoly(coefficient(d));
  }
  return acc;
}

UniPoly UniPoly::pow(int exponent) const {
  UniPoly result(1);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  for (const auto& [d, c] : other.terms_) add_term(d, -c);
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& other) {
  UniPoly product;
  for (const auto& [da, ca] : terms_) {
    for (const auto& [db, cb] : other.terms_) product.add_term(da + db, ca * cb);
  }
  terms_ = std::move(product.terms_);
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out;
  for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
  return out;
}

namespace {

void append_term(std::ostringstream& out, bool first, const BigInt& c,
                 const std::string& monomial) {
  const bool negative = c < 0;
  BigInt magnitude = abs(c);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    out << magnitude.get_str();
  } else if (magnitude != 1) {
    out << magnitude.get_str() << "*" << monomial;
  } else {
    out << monomial;
  }
}

std::string power(const std::string& var, int d) {
  if (d == 0) return "";
  if (d == 1) return var;
  return var + "^" + std::to_string(d);
}

}  // namespace

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    append_term(out, first, it->second, power(var, it->first));
    first = false;
  }
  return out.str();
}

BiPoly::BiPoly(BigInt constant) { add_term(0, 0, constant); }

BiPoly BiPoly::monomial(int t_degree, int s_degree, const BigInt& coefficient) {
  if (t_degree < 0 || s_degree < 0) throw InvalidInput("negative exponent");
  BiPoly p;
  p.add_term(t_degree, s_degree, coefficient);
  return p;
}

BiPoly BiPoly::in_t(const UniPoly& p) {
  BiPoly out;
  for (const auto& [d, c] : p.terms()) out.add_term(d, 0, c);
  return out;
}

BiPoly BiPoly::in_s(const UniPoly& p) {
  BiPoly out;
  for (const auto& [d, c] : p.terms()) out.add_term(0, d, c);
  return out;
}

BiPoly BiPoly::of_product(const UniPoly& p) {
  BiPoly out;
  for (const auto& [d, c] : p.terms()) out.add_term(d, d, c);
  return out;
}

BigInt BiPoly::coefficient(int t_degree, int s_degree) const {
  auto it = terms_.find({t_degree, s_degree});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(int t_degree, int s_degree, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace({t_degree, s_degree}, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

BigInt int_power(const BigInt& base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

}  // namespace

BiPoly BiPoly::at_t(const BigInt& value) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    out.add_term(0, e.second, c * int_power(value, e.first));
  }
  return out;
}

BiPoly BiPoly::at_s(const BigInt& value) const {
  BiPoly out;
  for (const auto& [e, c] : terms_) {
    out.add_term(e.first, 0, c * int_power(value, e.second));
  }
  return out;
}

BiPoly BiPoly::pow(int exponent) const {
  BiPoly result(1);
  for (int i = 0; i < exponent; ++i) result *= *this;
  return result;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  BiPoly product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      product.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first, then by t-degree.
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  for (const auto& [e, c] : ordered) {
    std::string mono = power("t", e.first);
    const std::string sp = power("s", e.second);
    if (!mono.empty() && !sp.empty()) mono += "*";
    mono += sp;
    append_term(out, first, c, mono);
    first = false;
  }
  return out.str();
}

Rational eval_uni(const UniPoly& p, const Rational& x) { return p.evaluate(x); }

UniPoly specialize_bi(const BiPoly& p, const UniPoly& t_image,
                      const UniPoly& s_image, int sign_exponent) {
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    out += UniPoly(c) * t_image.pow(e.first) * s_image.pow(e.second);
  }
  if (sign_exponent % 2 != 0) out = -out;
  return out;
}

WhitneySeq whitney_sequence(const UniPoly& chi, int rank) {
  if (rank < 0) throw InvalidInput("negative rank");
  if (chi.degree() > rank) {
    throw InvalidInput("polynomial degree " + std::to_string(chi.degree()) +
                       " exceeds rank " + std::to_string(rank));
  }
  WhitneySeq w;
  w.rank = rank;
  w.values.resize(rank + 1);
  for (int i = 0; i <= rank; ++i) {
    w.values[i] = sign_power(i) * chi.coefficient(rank - i);
  }
  return w;
}

UniPoly from_whitney(const WhitneySeq& w) {
  UniPoly out;
  for (int i = 0; i < static_cast<int>(w.values.size()); ++i) {
    out.add_term(w.rank - i, sign_power(i) * w.values[i]);
  }
  return out;
}

ShapeReport shape_report(const WhitneySeq& w) {
  const auto& v = w.values;
  ShapeReport report;
  report.alternating_nonzero = !v.empty() && v[0] == 1;
  for (const auto& x : v) {
    if (x <= 0) report.alternating_nonzero = false;
  }

  std::size_t i = 0;
  while (i + 1 < v.size() && v[i] <= v[i + 1]) ++i;
  while (i + 1 < v.size() && v[i] >= v[i + 1]) ++i;
  report.unimodal = v.empty() || i + 1 == v.size();

  report.log_concave = true;
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    if (v[k - 1] * v[k + 1] > v[k] * v[k]) report.log_concave = false;
  }
  return report;
}

}  // namespace semimat

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

#include "semimat/linalg.hpp"

#include <cstdint>
#include <utility>

namespace semimat {

Field Field::prime(long p) {
  if (p < 2 || p >= (1L << 31)) {
    throw InvalidInput("field characteristic " + std::to_string(p) + " out of range");
  }
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw InvalidInput(std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::name() const {
  return is_prime() ? "F_" + std::to_string(p_) : "Q";
}

namespace {

std::int64_t mod(const BigInt& x, long p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a is nonzero mod p.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

RowEchelon reduce_mod_p(const Matrix& rows, int cols, long p) {
  std::vector<std::vector<std::int64_t>> m;
  m.reserve(rows.size());
  const Field f = Field::prime(p);
  for (const auto& row : rows) {
    std::vector<std::int64_t> r(cols);
    for (int j = 0; j < cols; ++j) r[j] = f.normalize(row[j]).get_num().get_si();
    m.push_back(std::move(r));
  }
  RowEchelon out;
  out.cols = cols;
  std::size_t next = 0;
  for (int col = 0; col < cols && next < m.size(); ++col) {
    std::size_t piv = next;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[next]);
    const std::int64_t inv = inverse_mod(m[next][col], p);
    for (auto& v : m[next]) v = v * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == next || m[i][col] == 0) continue;
      const std::int64_t factor = m[i][col];
      for (int j = 0; j < cols; ++j) {
        m[i][j] = ((m[i][j] - factor * m[next][j]) % p + p) % p;
      }
    }
    out.pivots.push_back(col);
    ++next;
  }
  for (std::size_t i = 0; i < next; ++i) {
    Vector r(cols);
    for (int j = 0; j < cols; ++j) r[j] = Rational(m[i][j]);
    out.rref.push_back(std::move(r));
  }
  return out;
}

// Bareiss forward elimination followed by rational back-substitution.
RowEchelon reduce_rational(const Matrix& rows, int cols) {
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt scale = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), row[j].get_den_mpz_t());
    std::vector<BigInt> r(cols);
    for (int j = 0; j < cols; ++j) {
      r[j] = row[j].get_num() * (scale / row[j].get_den());
    }
    m.push_back(std::move(r));
  }

  RowEchelon out;
  out.cols = cols;
  std::size_t next = 0;
  BigInt prev = 1;
  for (int col = 0; col < cols && next < m.size(); ++col) {
    std::size_t piv = next;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[next]);
    const BigInt& pv = m[next][col];
    for (std::size_t i = next + 1; i < m.size(); ++i) {
      for (int j = col + 1; j < cols; ++j) {
        BigInt v = pv * m[i][j] - m[i][col] * m[next][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
      m[i][col] = 0;
    }
    prev = m[next][col];
    out.pivots.push_back(col);
    ++next;
  }

  out.rref.resize(next, Vector(cols));
  for (std::size_t i = 0; i < next; ++i) {
    const BigInt& pv = m[i][out.pivots[i]];
    for (int j = 0; j < cols; ++j) {
      out.rref[i][j] = Rational(m[i][j], pv);
      out.rref[i][j].canonicalize();
    }
  }
  for (std::size_t i = next; i-- > 0;) {
    const int pc = out.pivots[i];
    for (std::size_t k = 0; k < i; ++k) {
      const Rational factor = out.rref[k][pc];
      if (factor == 0) continue;
      for (int j = pc; j < cols; ++j) out.rref[k][j] -= factor * out.rref[i][j];
    }
  }
  return out;
}

}  // namespace

Rational Field::normalize(const Rational& x) const {
  if (!is_prime()) return x;
  const std::int64_t den = mod(x.get_den(), p_);
  if (den == 0) {
    throw InvalidInput("value " + rational_string(x) + " is undefined in " + name());
  }
  const std::int64_t num = mod(x.get_num(), p_);
  return Rational(num * inverse_mod(den, p_) % p_);
}

RowEchelon row_reduce(const Matrix& rows, int cols, const Field& field) {
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols) throw InvalidInput("ragged matrix");
  }
  return field.is_prime() ? reduce_mod_p(rows, cols, field.characteristic())
                          : reduce_rational(rows, cols);
}

int matrix_rank(const Matrix& rows, int cols, const Field& field) {
  return row_reduce(rows, cols, field).rank();
}

std::vector<Vector> nullspace(const Matrix& rows, int cols, const Field& field) {
  const RowEchelon e = row_reduce(rows, cols, field);
  std::vector<char> is_pivot(cols, 0);
  for (int c : e.pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols);
    v[free] = 1;
    for (int i = 0; i < e.rank(); ++i) {
      v[e.pivots[i]] = field.normalize(-e.rref[i][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineChart> solve_affine(const Matrix& rows, const Vector& rhs,
                                        int cols, const Field& field) {
  if (rows.size() != rhs.size()) throw InvalidInput("solve_affine: size mismatch");
  Matrix augmented = rows;
  for (std::size_t i = 0; i < rows.size(); ++i) augmented[i].push_back(rhs[i]);
  const RowEchelon e = row_reduce(augmented, cols + 1, field);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;

  AffineChart chart;
  chart.base_point.assign(cols, Rational(0));
  for (int i = 0; i < e.rank(); ++i) chart.base_point[e.pivots[i]] = e.rref[i][cols];
  chart.directions = nullspace(rows, cols, field);
  return chart;
}

Rational dot(const Vector& a, const Vector& b, const Field& field) {
  if (a.size() != b.size()) throw InvalidInput("dot: size mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return field.normalize(acc);
}

}  // namespace semimat

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

#ifndef SEMIMAT_LINALG_HPP_
#define SEMIMAT_LINALG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "semimat/numbers.hpp"

namespace semimat {

// The rationals or a prime field F_p. Prime-field elements are carried as
// Rationals holding a residue in [0, p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws InvalidInput unless p is a prime below 2^31.
  static Field prime(long p);

  bool is_prime() const { return p_ != 0; }
  // 0 for Q.
  long characteristic() const { return p_; }
  std::string name() const;

  // Canonical representative of x in this field. Over F_p a fraction a/b maps
  // to a * b^{-1} mod p; throws InvalidInput when p divides b.
  Rational normalize(const Rational& x) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(long p) : p_(p) {}
  long p_;
};

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

struct RowEchelon {
  Matrix rref;              // reduced row echelon form, zero rows dropped
  std::vector<int> pivots;  // pivot column of each row
  int cols = 0;

  int rank() const { return static_cast<int>(pivots.size()); }
};

// Over Q the forward pass is fraction-free (Bareiss) on an integer copy of
// the rows; the reduced form is recovered by rational back-substitution.
RowEchelon row_reduce(const Matrix& rows, int cols, const Field& field);

int matrix_rank(const Matrix& rows, int cols, const Field& field);

// Basis of {v : rows * v = 0}, one vector per free column, with a 1 in that
// column and 0 in the other free columns.
std::vector<Vector> nullspace(const Matrix& rows, int cols, const Field& field);

// x = base_point + sum_j u_j directions[j].
struct AffineChart {
  Vector base_point;
  std::vector<Vector> directions;

  int dim() const { return static_cast<int>(directions.size()); }
};

// Solution set of rows * x = rhs, or nullopt when inconsistent. The base
// point sets every free variable to 0.
std::optional<AffineChart> solve_affine(const Matrix& rows, const Vector& rhs,
                                        int cols, const Field& field);

Rational dot(const Vector& a, const Vector& b, const Field& field);

}  // namespace semimat

#endif  // SEMIMAT_LINALG_HPP_

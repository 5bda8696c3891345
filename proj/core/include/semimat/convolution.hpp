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

#ifndef SEMIMAT_CONVOLUTION_HPP_
#define SEMIMAT_CONVOLUTION_HPP_

#include <string>
#include <vector>

#include "semimat/polynomial.hpp"
#include "semimat/semimatroid.hpp"

namespace semimat {

enum class ConvolutionVariant { kCharTs, kTutteCentral, kTutteFlats, kTutteCyclicFlats };

std::string variant_name(ConvolutionVariant v);

struct ConvolutionReport {
  BiPoly lhs;
  BiPoly rhs;
  ConvolutionVariant variant = ConvolutionVariant::kCharTs;
  bool equal = false;
};

// chi(ts) against the sum over flats X of t^{r-r(X)} chi(C|X;t) chi(C/X;s).
// Throws InvalidInput on a semimatroid with a loop.
ConvolutionReport char_convolution(const Semimatroid& s);

// T(t,s) against the sum of T(C|X;0,s) T(C/X;t,0) over central sets, flats,
// or cyclic flats. `variant` must be one of the three Tutte variants.
ConvolutionReport tutte_convolution(const Semimatroid& s, ConvolutionVariant variant);

// Flats whose restriction has no bridge, sorted by bitmask.
std::vector<Subset> cyclic_flats(const Semimatroid& s);

}  // namespace semimat

#endif  // SEMIMAT_CONVOLUTION_HPP_

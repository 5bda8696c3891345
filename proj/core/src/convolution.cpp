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

#include "semimat/convolution.hpp"

namespace semimat {

std::string variant_name(ConvolutionVariant v) {
  switch (v) {
    case ConvolutionVariant::kCharTs: return "char_ts";
    case ConvolutionVariant::kTutteCentral: return "tutte_central";
    case ConvolutionVariant::kTutteFlats: return "tutte_flats";
    case ConvolutionVariant::kTutteCyclicFlats: return "tutte_cyclic_flats";
  }
  return "unknown";
}

ConvolutionReport char_convolution(const Semimatroid& s) {
  if (s.has_loop()) throw InvalidInput("the characteristic convolution needs a loopless semimatroid");
  ConvolutionReport out;
  out.variant = ConvolutionVariant::kCharTs;
  out.lhs = BiPoly::of_product(characteristic(s));
  for (Subset x : s.flats()) {
    const UniPoly below = characteristic(s.restrict_to(x));
    const UniPoly above = characteristic(s.contract(x));
    out.rhs += BiPoly::monomial(s.rank() - s.rank(x), 0) * BiPoly::in_t(below) *
               BiPoly::in_s(above);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

std::vector<Subset> cyclic_flats(const Semimatroid& s) {
  std::vector<Subset> out;
  for (Subset x : s.flats()) {
    const Semimatroid part = s.restrict_to(x);
    bool bridgeless = true;
    for (int e : elements(x)) {
      if (part.is_bridge(e)) {
        bridgeless = false;
        break;
      }
    }
    if (bridgeless) out.push_back(x);
  }
  return out;
}

ConvolutionReport tutte_convolution(const Semimatroid& s, ConvolutionVariant variant) {
  std::vector<Subset> index;
  switch (variant) {
    case ConvolutionVariant::kTutteCentral: index = s.central_sets(); break;
    case ConvolutionVariant::kTutteFlats: index = s.flats(); break;
    case ConvolutionVariant::kTutteCyclicFlats: index = cyclic_flats(s); break;
    case ConvolutionVariant::kCharTs:
      throw InvalidInput("tutte_convolution needs a Tutte variant");
  }
  ConvolutionReport out;
  out.variant = variant;
  out.lhs = tutte(s);
  for (Subset x : index) {
    out.rhs += tutte(s.restrict_to(x)).at_t(0) * tutte(s.contract(x)).at_s(0);
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace semimat

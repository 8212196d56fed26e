// Copyright 2026 The zerocurve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Zeros of P_30 for A = z + 5, B = -z^2 + 2z + 5 and where they sit on Im(B^3/A^2) = 0.

#include <cstdio>

#include "zerocurve/zerocurve.hpp"

int main() {
  using namespace zerocurve;
  const RecurrenceSpec spec{3, 2, parse_poly("z+5"), parse_poly("-z^2+2z+5")};

  const SequenceWindow win = sequence_generate(spec, 30);
  std::printf("deg P_30 = %zu\n", *win.polys.back().degree());

  const VerificationReport rep = verify_zeros_on_curve(spec, 30);
  for (const auto& r : rep.records)
    std::printf("z = %+.6f %+.6fi  w = %+.4e  |sin arg w| = %.1e\n", r.z.real(), r.z.imag(), r.w.real(), r.im_defect);
  std::printf("%zu of %zu zeros on the curve\n", rep.aggregates.passing, rep.aggregates.total);

  const QDiscResult qd = q_discriminant_trinomial(1.0, 1.0, 3, 2, 2.0);
  std::printf("q-discriminant of t^3 + t^2 + 1 at q = 2: %g\n", qd.value.real());
  return 0;
}

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

#ifndef ZEROCURVE_VERSION_HPP
#define ZEROCURVE_VERSION_HPP

namespace zerocurve {

inline constexpr const char* kToolVersion = "zerocurve 0.4.0";

}  // namespace zerocurve

#endif  // ZEROCURVE_VERSION_HPP

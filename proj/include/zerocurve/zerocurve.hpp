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

#ifndef ZEROCURVE_ZEROCURVE_HPP
#define ZEROCURVE_ZEROCURVE_HPP

#include "curvetrace.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "qdisc.hpp"
#include "recurrence.hpp"
#include "roots.hpp"
#include "verify.hpp"
#include "version.hpp"

#endif  // ZEROCURVE_ZEROCURVE_HPP

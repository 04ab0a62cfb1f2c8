// Copyright 2026 The kpcst Authors
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

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace kpcst {

// Exact arbitrary-precision rational. Every cost, penalty, dual value and
// ratio in the library is one of these; no floating point enters a
// comparison.
using Rational = mpq_class;

// Accepts "p", "p/q" (nonnegative, q > 0). Returns nullopt on malformed or
// negative input. The result is canonical (fully reduced).
std::optional<Rational> ParseRational(std::string_view text);

// Canonical "p" or "p/q" form.
std::string ToString(const Rational& value);

// Fixed-point decimal rendering, for human-facing output only.
std::string ToDecimal(const Rational& value, int digits = 6);

}  // namespace kpcst

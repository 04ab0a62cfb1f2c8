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

#include "core/rational.hpp"

#include <algorithm>
#include <cctype>

#include "core/error.hpp"

namespace kpcst {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kValidation: return "ValidationError";
    case ErrorCode::kDisconnectedInput: return "DisconnectedInput";
    case ErrorCode::kIncompleteGraph: return "IncompleteGraph";
    case ErrorCode::kNonMetricGraph: return "NonMetricGraph";
    case ErrorCode::kInfeasibleK: return "InfeasibleK";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kUndefinedFactor: return "UndefinedFactor";
    case ErrorCode::kMissingOracle: return "MissingOracle";
    case ErrorCode::kRootMismatch: return "RootMismatch";
    case ErrorCode::kIterationLimit: return "IterationLimit";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool AllDigits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!AllDigits(num) || !AllDigits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

std::string ToDecimal(const Rational& value, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = sgn(value) < 0;
  Rational a = abs(value);
  // Round half up on the magnitude.
  mpz_class scaled = (a.get_num() * scale * 2 + a.get_den()) / (a.get_den() * 2);
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string frac_str = frac.get_str(10);
  if (static_cast<int>(frac_str.size()) < digits) {
    frac_str.insert(0, static_cast<size_t>(digits) - frac_str.size(), '0');
  }
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str(10);
  if (digits > 0) out += "." + frac_str;
  return out;
}

}  // namespace kpcst

// Copyright 2026 The sgap Authors
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

#ifndef SGAP_ERROR_HPP_
#define SGAP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgap {

enum class ErrorKind {
  Parse,
  Domain,
  Horizon,
  Undecidable,
  ExcludedPoint,
  Overflow,
  NoConvergence,
};

std::string_view error_kind_name(ErrorKind kind);

// All library failures are reported through this one exception type. `hint`
// carries a machine-usable suggestion (e.g. the conjugate representative of an
// excluded real) and is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string hint = {})
      : std::runtime_error(message), kind_(kind), hint_(std::move(hint)) {}

  ErrorKind kind() const { return kind_; }
  const std::string& hint() const { return hint_; }

 private:
  ErrorKind kind_;
  std::string hint_;
};

// Three-valued verdict for properties that a finite representation may not
// be able to settle.
enum class Verdict { False, True, Unknown };

inline Verdict verdict_of(bool b) { return b ? Verdict::True : Verdict::False; }
std::string_view verdict_name(Verdict v);

}  // namespace sgap

#endif  // SGAP_ERROR_HPP_

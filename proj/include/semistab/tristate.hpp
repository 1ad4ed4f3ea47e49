// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>

namespace semistab {

/// Three-valued logic for conditions that finite sampling cannot always
/// certify. `Unknown` is an honest answer, never a guess.
enum class Tristate { False, True, Unknown };

constexpr Tristate tristate_of(bool b) { return b ? Tristate::True : Tristate::False; }

constexpr Tristate operator!(Tristate t) {
  switch (t) {
    case Tristate::False: return Tristate::True;
    case Tristate::True: return Tristate::False;
    default: return Tristate::Unknown;
  }
}

constexpr Tristate operator&&(Tristate a, Tristate b) {
  if (a == Tristate::False || b == Tristate::False) return Tristate::False;
  if (a == Tristate::True && b == Tristate::True) return Tristate::True;
  return Tristate::Unknown;
}

constexpr std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    default: return "unknown";
  }
}

}  // namespace semistab

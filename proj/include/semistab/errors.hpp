// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace semistab {

/// Base class of all errors raised by the library. `name()` is the stable
/// identifier surfaced by the CLI (the message may carry extra context).
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
  virtual const char* name() const noexcept { return "Error"; }
};

#define SEMISTAB_DEFINE_ERROR(Type)                                        \
  class Type : public Error {                                              \
  public:                                                                  \
    explicit Type(const std::string& msg) : Error(msg) {}                  \
    const char* name() const noexcept override { return #Type; }           \
  }

SEMISTAB_DEFINE_ERROR(NonPositivePoint);
SEMISTAB_DEFINE_ERROR(EmptySpectrum);
SEMISTAB_DEFINE_ERROR(OutOfRange);
SEMISTAB_DEFINE_ERROR(InvalidParameter);
SEMISTAB_DEFINE_ERROR(NotBijective);
SEMISTAB_DEFINE_ERROR(OnSpectrum);
SEMISTAB_DEFINE_ERROR(InsufficientRange);
SEMISTAB_DEFINE_ERROR(NotSemiuniform);
SEMISTAB_DEFINE_ERROR(ConfigError);

#undef SEMISTAB_DEFINE_ERROR

}  // namespace semistab

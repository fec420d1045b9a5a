// Copyright 2026 The oBAKE Authors
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

#ifndef OBAKE_ERRORS_HPP
#define OBAKE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace obake {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates a documented precondition (wrong length,
/// out-of-range value, mismatched dimensions).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A frame could not be produced, e.g. it would exceed the frame cap.
class EncodeError : public Error {
 public:
  using Error::Error;
};

/// A frame was rejected by the decoder. Carries the byte offset at which
/// the fault was detected.
class DecodeError : public Error {
 public:
  DecodeError(const std::string& what, std::size_t offset)
      : Error(what + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Failure of the transport carrying frames between the two roles.
/// Distinct from protocol aborts, which are ordinary session outcomes.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// The system entropy source failed. Fatal: no protocol run may continue.
class EntropyError : public Error {
 public:
  using Error::Error;
};

}  // namespace obake

#endif  // OBAKE_ERRORS_HPP

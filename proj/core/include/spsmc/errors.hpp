/*
 * Copyright 2026 The spsmc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SPSMC_ERRORS_HPP
#define SPSMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spsmc {

/// Base class for all errors raised by the toolchain.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: unknown names, out-of-range indices, inconsistent data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A required piece of configuration is missing (e.g. final states).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Formula evaluation hit an undefined case (unbound variable, finite model
/// asked an infinite-horizon question).
class EvalError : public Error {
 public:
  using Error::Error;
};

/// Quantifier elimination failed (unsupported predicate, zero bound).
class GroundingError : public Error {
 public:
  using Error::Error;
};

/// SMV emission failed (bound missing for a used type).
class EmissionError : public Error {
 public:
  using Error::Error;
};

/// A size limit of a desk-scale algorithm was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace spsmc

#endif  // SPSMC_ERRORS_HPP

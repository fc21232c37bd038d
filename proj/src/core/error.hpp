/*
 * Copyright 2026 The CARE Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace care {

/// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File or stream could not be opened/read/written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data; message carries source name and line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Invalid user-tunable configuration (ratios, cutoffs, thresholds, alpha).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A referenced entity (researcher, article) does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// A required input set came out empty (no readings, no evaluable researchers).
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Misuse of an API at the call-site level (bad index, null handle).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace care

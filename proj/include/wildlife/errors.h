// Copyright 2026 The Wildlife Event Extraction Authors.
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

#ifndef WILDLIFE_ERRORS_H_
#define WILDLIFE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace wildlife {

// Base class for all errors raised by the extraction pipeline.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Report filename does not follow <source>-<YYYY>-<MM>.txt.
class NamingError : public Error {
 public:
  using Error::Error;
};

// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// Lexicon rows are malformed or conflict with each other.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed CSV or config content.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Event store constraint violation (unknown report, duplicate id).
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Event store I/O failure.
class StoreError : public Error {
 public:
  using Error::Error;
};

// API misuse, e.g. evaluating events from different reports together.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace wildlife

#endif  // WILDLIFE_ERRORS_H_

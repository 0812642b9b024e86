// Copyright 2026 The wikiqual Authors.
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

#ifndef WIKIQUAL_ERRORS_H_
#define WIKIQUAL_ERRORS_H_

#include <stdexcept>
#include <string>

namespace wikiqual {

// Bad input data: malformed records, inconsistent stores, degenerate
// training sets. The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments or configuration. Exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error tied to a location in an input file.
class RecordError : public DataError {
 public:
  RecordError(const std::string& file, int line, const std::string& field,
              const std::string& what)
      : DataError(file + ":" + std::to_string(line) + ": field '" + field +
                  "': " + what),
        file_(file),
        line_(line),
        field_(field) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::string file_;
  int line_;
  std::string field_;
};

}  // namespace wikiqual

#endif  // WIKIQUAL_ERRORS_H_

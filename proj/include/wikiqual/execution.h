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

#ifndef WIKIQUAL_EXECUTION_H_
#define WIKIQUAL_EXECUTION_H_

namespace wikiqual {

// Kernels that have an OpenMP version keep a serial reference
// implementation; both produce bitwise-identical results.
enum class Execution { kSerial, kParallel };

// Sets the OpenMP thread count (<= 0 leaves the runtime default).
void SetThreadCount(int threads);
int ThreadCount();

}  // namespace wikiqual

#endif  // WIKIQUAL_EXECUTION_H_

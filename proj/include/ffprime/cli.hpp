// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The ffprime Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Command-line front end. `run` is the whole program minus process setup,
// so tests can drive it with in-memory streams.
//
// Exit status: 0 success, 1 usage or input error, 2 enumeration budget
// exceeded, 3 a verification check failed.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffprime::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitVerifyFail = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffprime::cli

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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace ffprime {

/// Calls fn(i) for every i in [0, n) using up to `jobs` threads. Indices are
/// claimed dynamically; the first exception thrown by any call is rethrown
/// after all workers stop.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

/// Splits [0, total) into at most `parts` contiguous half-open ranges.
std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total, std::size_t parts);

}  // namespace ffprime

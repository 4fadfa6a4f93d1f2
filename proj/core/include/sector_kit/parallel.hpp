/*
 * Copyright 2026 The sector-kit Authors
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

#include <cstddef>
#include <functional>

namespace sector_kit {

// Worker cap: SECTOR_KIT_THREADS if set to a positive integer, else hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, count). Callers store results by index, so the
// outcome never depends on scheduling. Exceptions are rethrown (lowest index wins).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace sector_kit

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

// Convenience umbrella header.
#include "sector_kit/cayley.hpp"
#include "sector_kit/errors.hpp"
#include "sector_kit/families.hpp"
#include "sector_kit/fracpow.hpp"
#include "sector_kit/io.hpp"
#include "sector_kit/kato_core.hpp"
#include "sector_kit/matrix_core.hpp"
#include "sector_kit/parallel.hpp"
#include "sector_kit/sector_analysis.hpp"

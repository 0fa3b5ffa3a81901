/* Copyright 2026 The frt Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <filesystem>
#include <iosfwd>

#include "frt/grid.hpp"

namespace frt {

// CSV signal format: header `x,re,im`, one row per grid point in ascending x,
// 17 significant digits. The grid is recovered from the x column, which must
// be uniform (1e-9 relative) and symmetric about zero.

SampledSignal read_signal(std::istream& in);
SampledSignal read_signal(const std::filesystem::path& path);

void write_signal(const SampledSignal& f, std::ostream& out);
void write_signal(const SampledSignal& f, const std::filesystem::path& path);

}  // namespace frt

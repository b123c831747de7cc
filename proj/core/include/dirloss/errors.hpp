// SPDX-License-Identifier: Apache-2.0
//
// dirloss - directional path loss engine for mmWave radio links
// Copyright (C) 2026 the dirloss authors
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
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace dirloss
{

// Invalid parameters, out-of-range model inputs, malformed files.
class ValidationError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Hard numerical failures (non-finite results, failed quadrature).
// Refinement disagreements are reported as statuses, not exceptions.
class NumericError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace dirloss

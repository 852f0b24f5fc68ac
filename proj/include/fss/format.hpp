/*
 * Copyright 2026 The FSS Analytics Authors
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

#include <string>

namespace fss::format {

/// Shortest representation that parses back to the same double.
std::string roundtrip(double x);

/// Nine significant digits, as used by the scores export.
std::string sig9(double x);

/// Fixed decimals; a value that rounds to zero never renders as "-0.00".
std::string fixed(double x, int decimals);

/// 100*x with one decimal and a trailing '%'. With signed=true positive
/// values get a leading '+'.
std::string percent(double fraction, int decimals = 1, bool with_sign = false);

}  // namespace fss::format

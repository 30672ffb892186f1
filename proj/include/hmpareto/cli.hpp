/*
   Copyright 2026, The hmpareto Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace hmp::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Runs one `hmpareto` subcommand. `args` excludes the program name.
///
/// Results go to `--out` when given (written atomically, with a
/// `<out>.manifest.json` alongside) and to `out` otherwise. Returns 0 on
/// success; on failure prints a single `hmpareto: error: ...` line to `err`,
/// leaves no output file behind and returns nonzero.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace hmp::cli

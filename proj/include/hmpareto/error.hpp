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

#include <stdexcept>
#include <string>

namespace hmp {

/// Input violates a documented invariant (platform, parameters, plan, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Model evaluated outside its domain, e.g. a configuration with no active core.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Not enough information in the data to fit the requested parameters.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. The message names the offending line.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hmp

// Copyright 2026 The spacking Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace spack {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotNonDecreasing : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct BadParameter : Error {
    using Error::Error;
};

struct HypothesisViolated : Error {
    using Error::Error;
};

struct MalformedGraph6 : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

struct BadColoring : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

// A finite packing sequence was exhausted without finding any valid coloring.
struct NoFiniteColoring : Error {
    using Error::Error;
};

}  // namespace spack

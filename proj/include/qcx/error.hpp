// Copyright 2026 The qcx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QCX_ERROR_HPP
#define QCX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qcx {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Raised when a Kirkwood-Dirac frame is requested from bases with a
/// (near-)vanishing cross overlap. `i`, `j` name the offending pair.
struct DegenerateFrame : Error {
    DegenerateFrame(int i, int j, double overlap);
    int i;
    int j;
    double overlap;
};

/// Raised by bisection when the predicate is false at the upper end.
struct NoThreshold : Error {
    using Error::Error;
};

}  // namespace qcx

#endif

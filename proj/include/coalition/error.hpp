/*
 * Copyright 2026 The Coalition Former Authors
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

#ifndef COALITION_ERROR_HPP
#define COALITION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace coalition {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented invariant (bad ids, duplicate edges, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Malformed serialized document. The message carries the field or
/// line/column context.
class ParseError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// A configured size guard or enumeration limit was hit.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace coalition

#endif // COALITION_ERROR_HPP

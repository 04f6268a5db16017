/************************************************************************[errors.hpp]
Copyright (c) 2026, The dispenser authors

Permission is hereby granted, free of charge, to any person obtaining a copy of this
software and associated documentation files (the "Software"), to deal in the Software
without restriction, including without limitation the rights to use, copy, modify,
merge, publish, distribute, sublicense, and/or sell copies of the Software, and to
permit persons to whom the Software is furnished to do so, subject to the following
conditions:

The above copyright notice and this permission notice shall be included in all copies
or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED,
INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A
PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF
CONTRACT, TORT OR OTHERWISE, ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE
OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.
*************************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace dispenser {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems in DIMACS / WDIMACS input. Thrown directly for malformed tokens that
// do not fall under one of the named subclasses.
class DimacsError : public Error {
public:
    using Error::Error;
};

class MalformedHeader : public DimacsError {
public:
    using DimacsError::DimacsError;
};

class LiteralOutOfRange : public DimacsError {
public:
    using DimacsError::DimacsError;
};

class UnterminatedClause : public DimacsError {
public:
    using DimacsError::DimacsError;
};

class ClauseCountMismatch : public DimacsError {
public:
    using DimacsError::DimacsError;
};

// Exhaustive-enumeration guard tripped (oracle module).
class TooManyVariables : public Error {
public:
    using Error::Error;
};

// Sum of soft weights (or top) is not representable.
class WeightOverflow : public Error {
public:
    using Error::Error;
};

// A NodeRef was passed to a manager that did not create it.
class ManagerMismatch : public Error {
public:
    using Error::Error;
};

class LevelOutOfRange : public Error {
public:
    using Error::Error;
};

// Two engines returned different answers for the same formula. Always a bug.
class EngineDisagreement : public Error {
public:
    using Error::Error;
};

} // namespace dispenser

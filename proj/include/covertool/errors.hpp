#pragma once

#include <stdexcept>
#include <string>

namespace covertool {

// Base class for everything this library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Resource-ceiling errors (CLI exit code 4).
class SieveTooLarge : public Error {
public:
    using Error::Error;
};
class TooManySubsets : public Error {
public:
    using Error::Error;
};
class EnumerationTooLarge : public Error {
public:
    using Error::Error;
};
class WorkCeilingExceeded : public Error {
public:
    using Error::Error;
};

// Input/contract errors (CLI exit code 3).
class PreconditionFailed : public Error {
public:
    using Error::Error;
};
class InvalidModulus : public Error {
public:
    using Error::Error;
};
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

// Hard failures: a verified mathematical statement did not hold. These are
// never downgraded to warnings; they indicate an implementation bug or a
// false claim and must abort loudly (CLI exit code 2).
class TheoremViolated : public Error {
public:
    using Error::Error;
};
class CharacterizationMismatch : public Error {
public:
    using Error::Error;
};
class NormNotRationalInteger : public Error {
public:
    using Error::Error;
};

// Resource ceilings, overridable per call and from the CLI.
struct Limits {
    long long sieve_ceiling = 10'000'000;  // max lcm the residue sieve accepts
    long long work_ceiling = 100'000'000;  // max candidate prefixes in enumeration
    long long tuple_ceiling = 10'000'000;  // max nodes in tuple DFS / product of moduli
};

}  // namespace covertool

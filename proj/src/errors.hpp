#pragma once

#include <stdexcept>
#include <string>

namespace cwchaos {

// Base error; name() returns the stable identifier surfaced through the C
// API and the CLI ("CriticalPoint", "DomainError", ...).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept = 0;
};

class DomainError final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "DomainError"; }
};

// The excluded parameter point (beta, h) = (1, 0): the limiting variance and
// the mixing parameters are undefined there.
class CriticalPointError final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "CriticalPoint"; }
};

// Requested mixing variance does not exceed the binomial variance a(1-a);
// the beta mixing law would degenerate to a point mass.
class DegenerateVarianceError final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "DegenerateVariance"; }
};

class UnnormalizedPmfError final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "UnnormalizedPmf"; }
};

} // namespace cwchaos

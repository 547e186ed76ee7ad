#pragma once

#include <stdexcept>
#include <string>

namespace loadcast {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- configuration problems (CLI exit code 1) ---

class ConfigError : public Error {
public:
    using Error::Error;
};

// --- data problems (CLI exit code 2) ---

class IngestError : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

class NormalizationError : public Error {
public:
    using Error::Error;
};

class DataQualityError : public Error {
public:
    using Error::Error;
};

class AlignmentError : public Error {
public:
    using Error::Error;
};

// A feature or scenario asked for hours the available record does not cover.
class CoverageError : public Error {
public:
    using Error::Error;
};

// --- modelling problems (CLI exit code 3) ---

class InsufficientDataError : public Error {
public:
    using Error::Error;
};

class TrainingError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace loadcast

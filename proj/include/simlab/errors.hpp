#pragma once

#include <stdexcept>
#include <string>

namespace simlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument values (out-of-range counts, malformed state).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operation applied to an object in the wrong state (e.g. stepping a finished cohort).
class StateError : public Error {
public:
    using Error::Error;
};

/// Bad configuration: unknown keys, missing fields, incompatible choices.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Template rendering problems: missing fields, leftover placeholders.
class TemplateError : public Error {
public:
    using Error::Error;
};

/// Remote backend failure after retries were exhausted.
class TransportError : public Error {
public:
    TransportError(const std::string& what, int attempts_made = 0)
        : Error(what), attempts(attempts_made) {}
    int attempts = 0;
};

/// Model estimation failures (rank-deficient designs, bad inputs).
class EstimationError : public Error {
public:
    using Error::Error;
};

/// Analysis-stage failures (empty samples, missing inputs).
class AnalysisError : public Error {
public:
    using Error::Error;
};

/// Transcript/file loading failures; carries a 1-based line number when known.
class LoadError : public Error {
public:
    LoadError(const std::string& what, long line_number = 0)
        : Error(what), line(line_number) {}
    long line = 0;
};

} // namespace simlab

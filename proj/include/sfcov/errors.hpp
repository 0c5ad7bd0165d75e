#pragma once

#include <stdexcept>
#include <string>

namespace sfcov {

/// Base class for all analyzer errors. Subclasses map onto CLI exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// No class in the input corpus parsed successfully.
class ParseFailure : public Error {
public:
    using Error::Error;
};

class RootNotFound : public Error {
public:
    explicit RootNotFound(const std::string& name)
        : Error("root class not found: " + name), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class MethodNotFound : public Error {
public:
    MethodNotFound(const std::string& cls, const std::string& method, int arity)
        : Error("method not found: " + cls + "." + method + "/" + std::to_string(arity)) {}
};

class NoOraclesFound : public Error {
public:
    explicit NoOraclesFound(const std::string& selector)
        : Error("no oracles matched selector: " +
                (selector.empty() ? std::string("<default>") : selector)) {}
};

/// Malformed row or header in a matrix file.
class FormatError : public Error {
public:
    FormatError(int line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

class UnknownOutcomeCode : public FormatError {
public:
    UnknownOutcomeCode(int line, const std::string& code)
        : FormatError(line, "unknown outcome code '" + code + "'") {}
};

class UnknownTestId : public Error {
public:
    explicit UnknownTestId(const std::string& id) : Error("unknown test id: " + id) {}
};

class NoDetectableFaults : public Error {
public:
    NoDetectableFaults() : Error("no detectable faults in selection") {}
};

class UnknownFixture : public Error {
public:
    explicit UnknownFixture(const std::string& name) : Error("unknown fixture: " + name) {}
};

}  // namespace sfcov

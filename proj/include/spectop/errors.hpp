#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectop {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownElement : public Error {
public:
    explicit UnknownElement(std::string name)
        : Error("unknown element '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const { return name_; }
private:
    std::string name_;
};

class DuplicateElement : public Error {
public:
    explicit DuplicateElement(std::string name)
        : Error("duplicate element '" + name + "'"), name_(std::move(name)) {}
    const std::string& name() const { return name_; }
private:
    std::string name_;
};

class InvalidName : public Error {
public:
    explicit InvalidName(const std::string& name) : Error("invalid element name '" + name + "'") {}
};

class CycleError : public Error {
public:
    explicit CycleError(std::vector<std::string> cycle);
    // Elements along the cycle; the last one leads back to the first.
    const std::vector<std::string>& cycle() const { return cycle_; }
private:
    std::vector<std::string> cycle_;
};

class NotALattice : public Error {
public:
    NotALattice(std::string a, std::string b, std::string what)
        : Error("elements '" + a + "' and '" + b + "' have no " + what), a_(std::move(a)), b_(std::move(b)) {}
    const std::string& first() const { return a_; }
    const std::string& second() const { return b_; }
private:
    std::string a_, b_;
};

class NotBounded : public Error {
public:
    using Error::Error;
};

class EmptySubset : public Error {
public:
    using Error::Error;
};

class NotSubsetOfX : public Error {
public:
    explicit NotSubsetOfX(const std::string& name) : Error("'" + name + "' is not a point of X") {}
};

class InvalidXSet : public Error {
public:
    using Error::Error;
};

class NotXTop : public Error {
public:
    using Error::Error;
};

class InvalidSpace : public Error {
public:
    using Error::Error;
};

class InternalInconsistency : public Error {
public:
    explicit InternalInconsistency(const std::string& what) : Error("internal inconsistency: " + what) {}
};

class SizeLimitExceeded : public Error {
public:
    SizeLimitExceeded(const std::string& what, std::size_t size, std::size_t limit)
        : Error(what + ": size " + std::to_string(size) + " exceeds limit " + std::to_string(limit)),
          size_(size), limit_(limit) {}
    std::size_t size() const { return size_; }
    std::size_t limit() const { return limit_; }
private:
    std::size_t size_, limit_;
};

class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::vector<std::string> witness);
    const std::string& axiom() const { return axiom_; }
    const std::vector<std::string>& witness() const { return witness_; }
private:
    std::string axiom_;
    std::vector<std::string> witness_;
};

class BadParameters : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
private:
    std::size_t line_, column_;
};

class SemanticError : public Error {
public:
    SemanticError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }
private:
    std::size_t line_;
};

}  // namespace spectop

#pragma once

/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every hankelkit module.
 *
 * Two families matter to callers: MathError (a pole, a vanishing pivot, a
 * division by zero; the input is well formed but the mathematics has no
 * answer) and UsageError (malformed input, missing parameters). The CLI maps
 * them to distinct exit codes.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankelkit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MathError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division by zero") {}
};

class PoleAtPoint : public MathError {
public:
    explicit PoleAtPoint(const std::string& point)
        : MathError("reduced denominator vanishes at q = " + point) {}
};

class PoleInSequence : public MathError {
public:
    explicit PoleInSequence(std::size_t n)
        : MathError("moment sequence has a pole at term " + std::to_string(n)), index_(n) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class PoleInFormula : public MathError {
public:
    explicit PoleInFormula(const std::string& what) : MathError("pole in formula: " + what) {}
};

class SingularLeadingMinor : public MathError {
public:
    explicit SingularLeadingMinor(std::size_t k)
        : MathError("leading principal minor " + std::to_string(k) + " vanishes"), index_(k) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class NotNormalized : public MathError {
public:
    NotNormalized() : MathError("moment sequence is not normalized: c(0) != 1") {}
};

class UnsupportedNegativeUpper : public UsageError {
public:
    explicit UnsupportedNegativeUpper(long long n)
        : UsageError("q-binomial with negative upper index " + std::to_string(n)) {}
};

class ParseError : public UsageError {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : UsageError("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class MissingParameter : public UsageError {
public:
    explicit MissingParameter(const std::string& name) : UsageError("missing parameter: " + name) {}
};

class InsufficientSamples : public UsageError {
public:
    InsufficientSamples(std::size_t wanted, std::size_t got)
        : UsageError("pole screening left " + std::to_string(got) + " of " +
                     std::to_string(wanted) + " requested samples") {}
};

}  // namespace hankelkit

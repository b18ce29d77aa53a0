#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simcore {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPartition : public Error {
public:
    using Error::Error;
};

class NotABetaSet : public Error {
public:
    using Error::Error;
};

class InvalidGenerators : public Error {
public:
    using Error::Error;
};

/// Raised when a gap query is made on a semigroup whose generators share a factor.
class InfiniteGapSet : public Error {
public:
    explicit InfiniteGapSet(long long gcd)
        : Error("gap set is infinite: generators have gcd " + std::to_string(gcd))
        , gcd_(gcd) {}
    long long gcd() const noexcept { return gcd_; }

private:
    long long gcd_;
};

class NotInPoset : public Error {
public:
    explicit NotInPoset(long long value)
        : Error(std::to_string(value) + " is not an element of the gap poset"), value_(value) {}
    long long value() const noexcept { return value_; }

private:
    long long value_;
};

/// Enumeration would produce more than `limit` objects.
class LimitExceeded : public Error {
public:
    explicit LimitExceeded(std::size_t limit)
        : Error("LimitExceeded: more than " + std::to_string(limit) + " order ideals"), limit_(limit) {}
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t limit_;
};

class NotCoprime : public Error {
public:
    NotCoprime(long long a, long long b)
        : Error("NotCoprime: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ") != 1") {}
};

class GcdNotOne : public Error {
public:
    GcdNotOne(long long a, long long b, long long c)
        : Error("GcdNotOne: gcd(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                std::to_string(c) + ") != 1") {}
};

class DegenerateTriple : public Error {
public:
    using Error::Error;
};

class NotAprimitive : public Error {
public:
    using Error::Error;
};

}  // namespace simcore

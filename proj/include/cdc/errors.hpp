#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed instance, placement, plan or design.
class InvalidInput : public Error {
public:
    using Error::Error;
};

class WrongK : public Error {
public:
    WrongK(int expected, int actual);
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class BudgetViolation : public Error {
public:
    explicit BudgetViolation(int node);
    int node() const noexcept { return node_; }

private:
    int node_;
};

class PlanningFailure : public Error {
public:
    using Error::Error;
};

// Enumeration refused because the instance exceeds the configured tractability guard.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

class UndecodablePayload : public Error {
public:
    UndecodablePayload(int receiver, std::size_t transmission);
    int receiver() const noexcept { return receiver_; }
    std::size_t transmission() const noexcept { return transmission_; }

private:
    int receiver_;
    std::size_t transmission_;
};

struct MissingValue {
    int node;
    int function;
    int file;
    friend bool operator==(const MissingValue&, const MissingValue&) = default;
};

class MissingIntermediate : public Error {
public:
    explicit MissingIntermediate(std::vector<MissingValue> gaps);
    const std::vector<MissingValue>& gaps() const noexcept { return gaps_; }

private:
    std::vector<MissingValue> gaps_;
};

} // namespace cdc

#pragma once

#include <stdexcept>
#include <string>

namespace orb {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& what) : Error(what) {}
};

struct NotNormal : Error {
    explicit NotNormal(const std::string& what) : Error(what) {}
};

struct BadAction : Error {
    explicit BadAction(const std::string& what) : Error(what) {}
};

struct BadIdentification : Error {
    explicit BadIdentification(const std::string& what) : Error(what) {}
};

struct ClosureTooLarge : Error {
    explicit ClosureTooLarge(const std::string& what) : Error(what) {}
};

struct CoprimalityViolated : Error {
    explicit CoprimalityViolated(const std::string& what) : Error(what) {}
};

struct NotAPGroup : Error {
    explicit NotAPGroup(const std::string& what) : Error(what) {}
};

struct BadKernel : Error {
    explicit BadKernel(const std::string& what) : Error(what) {}
};

struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};

struct AutBudgetExceeded : Error {
    explicit AutBudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotFGraph : Error {
    explicit NotFGraph(const std::string& what) : Error(what) {}
};

struct AbelianGroup : Error {
    explicit AbelianGroup(const std::string& what) : Error(what) {}
};

struct AuditFailure : Error {
    explicit AuditFailure(const std::string& what) : Error(what) {}
};

struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

} // namespace orb

#ifndef HNET_ERROR_HPP
#define HNET_ERROR_HPP

#include <stdexcept>
#include <string>

#include "hnet/core.hpp"

namespace hnet {

// Base of all operator errors. Parse errors are reported separately
// (see notation.hpp) because they carry source positions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DanglingReference : public Error {
public:
    explicit DanglingReference(ElementId missing, ElementId container = {})
        : Error("dangling reference to '" + missing.str() + "'" +
                (container.empty() ? std::string{} : " in '" + container.str() + "'")),
          missing_(std::move(missing)), container_(std::move(container)) {}

    const ElementId& missing() const noexcept { return missing_; }
    const ElementId& container() const noexcept { return container_; }

private:
    ElementId missing_;
    ElementId container_;
};

class UnknownSelector : public Error {
public:
    explicit UnknownSelector(std::string item)
        : Error("prune selector resolves to nothing: " + item), item_(std::move(item)) {}

    const std::string& item() const noexcept { return item_; }

private:
    std::string item_;
};

class UnknownBoundary : public Error {
public:
    explicit UnknownBoundary(ElementId b)
        : Error("unknown boundary '" + b.str() + "'"), boundary_(std::move(b)) {}

    const ElementId& boundary() const noexcept { return boundary_; }

private:
    ElementId boundary_;
};

class UnknownSeed : public Error {
public:
    explicit UnknownSeed(ElementId s)
        : Error("unknown seed vertex '" + s.str() + "'"), seed_(std::move(s)) {}

    const ElementId& seed() const noexcept { return seed_; }

private:
    ElementId seed_;
};

// An operator produced a result that fails validation. Never expected; raised
// so that a defect is loud instead of silently corrupting a model.
class ClosureViolation : public Error {
public:
    using Error::Error;
};

} // namespace hnet

#endif // HNET_ERROR_HPP

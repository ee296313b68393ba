#pragma once

#include <stdexcept>
#include <string>

namespace cliffq {

// Domain failures carry a stable machine-readable kind so the CLI can map
// them onto exit code 3 and a structured stderr report.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

struct NotRigidError : DomainError {
    NotRigidError(const std::string& point1, const std::string& point2)
        : DomainError("not-rigid",
                      "distance |" + point1 + point2 + "| changed between scene and image"),
          first(point1), second(point2) {}
    std::string first, second;
};

struct DegenerateConfigurationError : DomainError {
    explicit DegenerateConfigurationError(const std::string& what)
        : DomainError("degenerate-configuration", what) {}
};

struct AmbiguousRotationError : DomainError {
    explicit AmbiguousRotationError(const std::string& what)
        : DomainError("ambiguous-rotation", what) {}
};

struct SuperluminalVelocityError : DomainError {
    explicit SuperluminalVelocityError(const std::string& what)
        : DomainError("superluminal-velocity", what) {}
};

// A value is not representable exactly (non-square norm, non-Pythagorean
// velocity); approximate mode must be requested explicitly.
struct InexactError : DomainError {
    explicit InexactError(const std::string& what) : DomainError("inexact", what) {}
};

struct UnsupportedRepresentationError : DomainError {
    explicit UnsupportedRepresentationError(const std::string& what)
        : DomainError("unsupported-representation", what) {}
};

}  // namespace cliffq

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fibstab {

// Errors carry a stable machine-readable name next to the human message;
// the CLI forwards the name verbatim in its JSON error document.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

// Malformed textual input (rational tokens, JSON shape). Usage-level.
struct ParseError : Error {
    explicit ParseError(const std::string& message) : Error("parse-error", message) {}
};

// Operation needs pairing data only ProjectiveBundle geometries carry.
struct UnsupportedGeometryError : Error {
    explicit UnsupportedGeometryError(const std::string& message)
        : Error("unsupported-geometry", message) {}
};

// A C-torsion hint that contradicts the class data it came with.
struct InconsistentHintError : Error {
    explicit InconsistentHintError(const std::string& message)
        : Error("inconsistent-hint", message) {}
};

struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& message)
        : Error("invalid-params", message) {}
};

struct InvalidGeometryError : Error {
    explicit InvalidGeometryError(const std::string& message)
        : Error("invalid-geometry", message) {}
};

struct InvalidLatticeError : Error {
    explicit InvalidLatticeError(const std::string& message)
        : Error("invalid-lattice", message) {}
};

struct NotAFiltrationError : Error {
    explicit NotAFiltrationError(const std::string& message)
        : Error("not-a-filtration", message) {}
};

struct EmptyAmbientError : Error {
    explicit EmptyAmbientError(const std::string& message)
        : Error("empty-ambient", message) {}
};

struct InvalidCoefficientsError : Error {
    explicit InvalidCoefficientsError(const std::string& message)
        : Error("invalid-coefficients", message) {}
};

struct PoleAtBetaError : Error {
    explicit PoleAtBetaError(const std::string& message) : Error("pole-at-beta", message) {}
};

// The overdetermined coefficient solve of the projective-bundle module came
// out inconsistent; signals an implementation bug, not a user error.
struct InconsistentIdentityError : Error {
    explicit InconsistentIdentityError(const std::string& message)
        : Error("inconsistent-identity", message) {}
};

} // namespace fibstab

#pragma once

#include <stdexcept>
#include <string>

namespace qra {

struct QraError : std::runtime_error {
    explicit QraError(const std::string& m) : std::runtime_error(m) {}
};

// denominator vanishes at the requested root of unity
struct PoleAtRoot : QraError {
    explicit PoleAtRoot(const std::string& m) : QraError(m) {}
};

// evaluation hit a symbol the module window does not provide
struct MissingSymbol : QraError {
    explicit MissingSymbol(const std::string& m) : QraError(m) {}
};

// k / Cartan pair failed to act diagonally where required
struct NonSemisimple : QraError {
    explicit NonSemisimple(const std::string& m) : QraError(m) {}
};

// operator window kept growing without the kernel/span settling
struct NoStabilization : QraError {
    explicit NoStabilization(const std::string& m) : QraError(m) {}
};

// a vector expected to be an eigenvector was not
struct NotEigen : QraError {
    explicit NotEigen(const std::string& m) : QraError(m) {}
};

// root multiset contains a full eps-orbit where none is allowed
struct OrbitDetected : QraError {
    explicit OrbitDetected(const std::string& m) : QraError(m) {}
};

// presentation matrices violate the defining relations
struct RelationViolation : QraError {
    explicit RelationViolation(const std::string& m) : QraError(m) {}
};

// malformed descriptor / input object
struct SchemaError : QraError {
    explicit SchemaError(const std::string& m) : QraError(m) {}
};

// could not resolve polynomial roots from the given candidates
struct ResolveError : QraError {
    explicit ResolveError(const std::string& m) : QraError(m) {}
};

struct ParseError : QraError {
    explicit ParseError(const std::string& m) : QraError(m) {}
};

}  // namespace qra

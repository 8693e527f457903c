#pragma once

#include <stdexcept>
#include <string>

namespace ses {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroInverse : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BoundExceeded : Error { using Error::Error; };
struct ConstantPolynomial : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct NotBivariate : Error { using Error::Error; };
struct NotIrreducible : Error { using Error::Error; };
struct NotProper : Error { using Error::Error; };
struct MixedCodomain : Error { using Error::Error; };
struct DegeneratePencil : Error { using Error::Error; };
struct CentroidNotField : Error { using Error::Error; };
struct NotPerfectSquare : Error { using Error::Error; };
struct WrongResidue : Error { using Error::Error; };
struct UnsupportedDegree : Error { using Error::Error; };
struct UnsupportedOrder : Error { using Error::Error; };
struct InvalidInput : Error { using Error::Error; };

}  // namespace ses

#pragma once

#include <stdexcept>
#include <string>

namespace fusionkit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// modular data construction
struct NotCoprime : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct NotEvenLattice : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct WrongCosetCount : Error { using Error::Error; };
struct AmbiguousMinimalWeight : Error { using Error::Error; };

// fusion
struct NonIntegerFusion : Error { using Error::Error; };
struct NegativeFusion : Error { using Error::Error; };
struct EmptyFusionProduct : Error { using Error::Error; };

// quantum dimensions
struct ComplexRatio : Error { using Error::Error; };
struct NotPositive : Error { using Error::Error; };
struct BelowOne : Error { using Error::Error; };
struct NotDominant : Error { using Error::Error; };
struct LevelExceeded : Error { using Error::Error; };
struct RankUnsupported : Error { using Error::Error; };

// series limits
struct AllZeroDenominator : Error { using Error::Error; };
struct NoAdmissiblePoints : Error { using Error::Error; };

// spectral
struct NoConvergence : Error { using Error::Error; };

// finite groups
struct NotLatinSquare : Error { using Error::Error; };
struct NoIdentity : Error { using Error::Error; };
struct NotAssociative : Error { using Error::Error; };
struct MissingInverse : Error { using Error::Error; };
struct NotSubgroup : Error { using Error::Error; };
struct OrderTooLarge : Error { using Error::Error; };

} // namespace fusionkit

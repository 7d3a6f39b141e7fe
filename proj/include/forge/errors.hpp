#pragma once

#include <stdexcept>

namespace forge {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text that does not parse (numeric literals, polynomials, serialized values).
struct ParseError : Error {
  using Error::Error;
};

// Rational with a zero denominator requested.
struct ZeroDenominatorError : Error {
  using Error::Error;
};

// An operation would need more than the supported number of radicands.
struct UnsupportedTowerError : Error {
  using Error::Error;
};

// Taylor expansion at 0 of a rational function whose denominator vanishes there.
struct NotTaylorExpandableError : Error {
  using Error::Error;
};

// Laurent expansion at infinity needs a strictly proper rational function.
struct UnsupportedShapeError : Error {
  using Error::Error;
};

// Chord direction with a vanishing denominator.
struct DegenerateDirectionError : Error {
  using Error::Error;
};

// Seed whose radical construction divides by zero.
struct DegenerateSeedError : Error {
  using Error::Error;
};

// Seed tuple that does not satisfy its cube relation.
struct InvalidSeedError : Error {
  using Error::Error;
};

// No power of the base within the safety cap clears the denominators.
struct NotClearableError : Error {
  using Error::Error;
};

// Search bound too small to certify the requested result.
struct InsufficientBoundError : Error {
  using Error::Error;
};

// A generated tuple failed its own exact verification; always a bug.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

// Family name not among the built-in specs.
struct UnknownFamilyError : Error {
  using Error::Error;
};

}  // namespace forge

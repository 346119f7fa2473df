#pragma once

#include <stdexcept>
#include <string>

namespace intervals {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cover relation closes to a cycle, so no partial order exists.
struct CycleError : Error {
  using Error::Error;
};

// Enumeration would exceed the configured bound.
struct SizeError : Error {
  using Error::Error;
};

// A pair (x,y) is not an element of Gamma.
struct ElementError : Error {
  using Error::Error;
};

// A map between posets is not order-preserving, or its endpoints mismatch.
struct MorphismError : Error {
  using Error::Error;
};

// The composition pattern of a thin category fails associativity or unit laws.
struct AssociativityError : Error {
  using Error::Error;
};

// Cartan matrix is not unimodular.
struct SingularError : Error {
  using Error::Error;
};

// Requested interval [a,b] with a not below b.
struct IntervalError : Error {
  using Error::Error;
};

// A module lives over the wrong base poset.
struct BaseError : Error {
  using Error::Error;
};

// A projective resolution ran past the size of the base poset.
struct LengthError : Error {
  using Error::Error;
};

// A hom space between summands has dimension > 1.
struct ThicknessError : Error {
  using Error::Error;
};

// Rational Dyck paths need coprime rectangle sides.
struct CoprimalityError : Error {
  using Error::Error;
};

// Malformed text input.
struct ParseError : Error {
  using Error::Error;
};

// A structural invariant failed on construction.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace intervals

#ifndef QWILSON_ERRORS_HPP
#define QWILSON_ERRORS_HPP

#include <stdexcept>

namespace qwilson {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// divmod was given the zero polynomial as modulus.
class ZeroModulus : public Error {
 public:
  using Error::Error;
};

// divmod was given a modulus whose leading coefficient is not 1; division
// would leave the integers.
class NonMonicModulus : public Error {
 public:
  using Error::Error;
};

// A q-Fermat check was requested for a base not coprime to the modulus index.
class NotCoprime : public Error {
 public:
  using Error::Error;
};

// A prime parameter failed the deterministic primality check.
class NotPrime : public Error {
 public:
  using Error::Error;
};

// An orbit operation was applied to a permutation that is not a full cycle.
class NotAFullCycle : public Error {
 public:
  using Error::Error;
};

// An orbit of size > 1 produced a nonzero residue modulo Phi_n(q).  This can
// only mean an implementation bug; the orbit method proves each such sum
// vanishes.
class OrbitSumNonzero : public Error {
 public:
  using Error::Error;
};

// Polynomial or report text did not match the canonical grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A cache entry is unreadable, has the wrong format version, or failed its
// integrity check.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwilson

#endif  // QWILSON_ERRORS_HPP

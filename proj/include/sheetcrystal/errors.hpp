#pragma once

#include <stdexcept>
#include <string>

namespace sheetcrystal {

/// Base for every domain error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The electrostatic potential does not fall to -inf at both ends, so
/// exp(V/V0) cannot be normalized.
class NotNormalizable : public Error {
public:
  using Error::Error;
};

/// The two unbounded end regions carry different field magnitudes.
class AsymmetricAsymptoticField : public Error {
public:
  using Error::Error;
};

/// A wavefunction and a potential were built on different breakpoints.
class BreakpointMismatch : public Error {
public:
  using Error::Error;
};

class NoBoundStates : public Error {
public:
  using Error::Error;
};

/// An end segment carries a component that grows toward infinity.
class DivergentTail : public Error {
public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

} // namespace sheetcrystal

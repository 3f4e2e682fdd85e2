#pragma once

#include <complex>
#include <stdexcept>

namespace qtones {

using Complex = std::complex<double>;

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition or type invariant: bad wire index, qubit-count
/// mismatch, norm drift beyond tolerance, non-finite amplitude.
class ContractError : public Error {
  public:
    using Error::Error;
};

/// Requested synthesis frequency at or above the Nyquist limit.
class AliasingError : public Error {
  public:
    using Error::Error;
};

/// Amplitude encoding failed (all-zero signal, too few samples).
class EncodeError : public Error {
  public:
    using Error::Error;
};

/// Peak frequencies do not form a valid row/column DTMF pair.
class DtmfDecodeError : public Error {
  public:
    using Error::Error;
};

/// Broken RIFF/WAVE container structure.
class WavFormatError : public Error {
  public:
    using Error::Error;
};

/// Valid container but a codec, bit depth, or channel count we do not read.
class WavUnsupportedError : public Error {
  public:
    using Error::Error;
};

/// Data chunk declares more bytes than the file holds.
class WavTruncatedError : public Error {
  public:
    using Error::Error;
};

/// Sample outside [-1, 1] on WAV write; we never clip silently.
class ClippingError : public Error {
  public:
    using Error::Error;
};

} // namespace qtones

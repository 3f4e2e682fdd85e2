#pragma once

#include <span>
#include <string>
#include <vector>

#include "qtones/qft.hpp"
#include "qtones/types.hpp"

namespace qtones::spectral {

using qft::FourierConvention;
using qft::Normalization;

/// A discrete complex signal [f_0, ..., f_{N-1}].
using ComplexSignal = std::vector<Complex>;

/// Direct O(N^2) evaluation of c_k = factor * sum_j f_j omega^{jk}. This is
/// the ground-truth oracle for every transform in the project; it shares no
/// code with the circuit path or the fft.
ComplexSignal dft(std::span<const Complex> x, const FourierConvention& convention);

/// Radix-2 decimation-in-time, O(N log N). Length must be a power of two;
/// anything else throws (zero-pad explicitly, silent padding would shift
/// every bin frequency).
ComplexSignal fft(std::span<const Complex> x, const FourierConvention& convention);

/// Undoes dft(x, convention): opposite exponent sign, complementary
/// normalization (Plain -> 1/N, Unitary -> 1/sqrt(N), InverseN -> 1).
ComplexSignal inverse_dft(std::span<const Complex> c, const FourierConvention& convention);

/// Outcome of multiplying the two printed sparse 4x4 factors against F_4
/// (plain normalization, omega = +i) in exact Gaussian-integer arithmetic.
struct FactorizationReport {
    bool product_matches = false;   // some ordering reproduces F_4 exactly
    std::string holding_order;      // "U2*U1" or "U1*U2"
    int u1_nonzeros = 0;
    int u2_nonzeros = 0;
    bool f4_unitary_after_scaling = false; // (F_4/2)^dag (F_4/2) == I exactly
};

/// Builds the sparse factors U1 (butterfly combine) and U2 (even/odd split)
/// verbatim and reports which product order yields F_4. The factorization
/// holds as U2*U1, not U1*U2.
FactorizationReport sparse_factorization_check();

} // namespace qtones::spectral

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qtones/types.hpp"

namespace qtones {

/// Dense square complex matrix, row major. Holds circuit unitaries and the
/// transform matrices F_N; whether an instance is actually unitary depends on
/// the chosen normalization, so unitarity is a query, not a constructor
/// constraint.
class ComplexMatrix {
  public:
    explicit ComplexMatrix(std::size_t dim);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    Complex& at(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix multiply(const ComplexMatrix& rhs) const;
    ComplexMatrix adjoint() const;
    std::vector<Complex> apply(std::span<const Complex> v) const;

    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const ComplexMatrix& other) const;

    /// max_ij |(U^dag U - I)_ij|
    double unitarity_defect() const;
    bool is_unitary(double tol = 1e-9) const { return unitarity_defect() <= tol; }

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

} // namespace qtones

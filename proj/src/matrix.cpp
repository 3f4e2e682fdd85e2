#include "qtones/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtones {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {
    if (dim == 0) throw ContractError("matrix dimension must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::multiply(const ComplexMatrix& rhs) const {
    if (rhs.dim_ != dim_) throw ContractError("matrix product dimension mismatch");
    ComplexMatrix out(dim_);
    const std::int64_t n = static_cast<std::int64_t>(dim_);
#pragma omp parallel for if (n >= 64)
    for (std::int64_t r = 0; r < n; ++r) {
        for (std::int64_t k = 0; k < n; ++k) {
            const Complex lhs = at(static_cast<std::size_t>(r), static_cast<std::size_t>(k));
            if (lhs == Complex{0.0, 0.0}) continue;
            for (std::int64_t c = 0; c < n; ++c) {
                out.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) +=
                    lhs * rhs.at(static_cast<std::size_t>(k), static_cast<std::size_t>(c));
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) throw ContractError("matrix-vector dimension mismatch");
    std::vector<Complex> out(dim_, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{0.0, 0.0};
        for (std::size_t c = 0; c < dim_; ++c) acc += at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) throw ContractError("matrix comparison dimension mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    return worst;
}

double ComplexMatrix::unitarity_defect() const {
    const std::int64_t n = static_cast<std::int64_t>(dim_);
    double worst = 0.0;
#pragma omp parallel for reduction(max : worst) if (n >= 64)
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::int64_t k = 0; k < n; ++k) {
                acc += std::conj(at(static_cast<std::size_t>(k), static_cast<std::size_t>(i))) *
                       at(static_cast<std::size_t>(k), static_cast<std::size_t>(j));
            }
            if (i == j) acc -= Complex{1.0, 0.0};
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

} // namespace qtones

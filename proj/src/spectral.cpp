#include "qtones/spectral.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <numbers>

namespace qtones::spectral {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> unit_roots(std::size_t n, int sign) {
    std::vector<Complex> roots(n);
    const double base = sign * 2.0 * kPi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) roots[k] = std::polar(1.0, base * static_cast<double>(k));
    return roots;
}

void check_convention(const FourierConvention& conv) {
    if (conv.sign != 1 && conv.sign != -1)
        throw ContractError("transform sign must be +1 or -1");
}

ComplexSignal direct_transform(std::span<const Complex> x, int sign, double scale) {
    const std::size_t n = x.size();
    if (n == 0) throw ContractError("transform input must be non-empty");
    const std::vector<Complex> roots = unit_roots(n, sign);
    ComplexSignal out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) acc += x[j] * roots[(j * k) % n];
        out[k] = scale * acc;
    }
    return out;
}

} // namespace

ComplexSignal dft(std::span<const Complex> x, const FourierConvention& convention) {
    check_convention(convention);
    return direct_transform(x, convention.sign, convention.factor(x.size()));
}

ComplexSignal inverse_dft(std::span<const Complex> c, const FourierConvention& convention) {
    check_convention(convention);
    const std::size_t n = c.size();
    if (n == 0) throw ContractError("transform input must be non-empty");
    double scale = 0.0;
    switch (convention.normalization) {
        case Normalization::Unitary:
            scale = 1.0 / std::sqrt(static_cast<double>(n));
            break;
        case Normalization::Plain:
            scale = 1.0 / static_cast<double>(n);
            break;
        case Normalization::InverseN:
            scale = 1.0;
            break;
    }
    return direct_transform(c, -convention.sign, scale);
}

ComplexSignal fft(std::span<const Complex> x, const FourierConvention& convention) {
    check_convention(convention);
    const std::size_t n = x.size();
    if (n == 0) throw ContractError("transform input must be non-empty");
    if (!std::has_single_bit(n))
        throw ContractError("fft needs a power-of-two length, got " + std::to_string(n) +
                            "; zero-pad the signal to the next power of two");
    ComplexSignal a(x.begin(), x.end());

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = convention.sign * 2.0 * kPi / static_cast<double>(len);
        const std::size_t half = len / 2;
        for (std::size_t start = 0; start < n; start += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const Complex w = std::polar(1.0, ang * static_cast<double>(j));
                const Complex u = a[start + j];
                const Complex v = a[start + j + half] * w;
                a[start + j] = u + v;
                a[start + j + half] = u - v;
            }
        }
    }

    const double scale = convention.factor(n);
    if (scale != 1.0)
        for (Complex& v : a) v *= scale;
    return a;
}

namespace {

struct Gauss {
    long long re = 0;
    long long im = 0;
    bool operator==(const Gauss&) const = default;
};

Gauss gmul(const Gauss& a, const Gauss& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

using GaussMat4 = std::array<std::array<Gauss, 4>, 4>;

GaussMat4 gmatmul(const GaussMat4& a, const GaussMat4& b) {
    GaussMat4 out{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            for (int k = 0; k < 4; ++k) {
                const Gauss p = gmul(a[r][k], b[k][c]);
                out[r][c].re += p.re;
                out[r][c].im += p.im;
            }
    return out;
}

int nonzeros(const GaussMat4& m) {
    int count = 0;
    for (const auto& row : m)
        for (const Gauss& v : row)
            if (!(v == Gauss{})) ++count;
    return count;
}

} // namespace

FactorizationReport sparse_factorization_check() {
    const Gauss one{1, 0}, mone{-1, 0}, i{0, 1}, mi{0, -1}, zero{};

    // F_4 with omega = +i, plain normalization (rows 1, i, -1, -i).
    const GaussMat4 f4{{{one, one, one, one},
                        {one, i, mone, mi},
                        {one, mone, one, mone},
                        {one, mi, mone, i}}};
    // The printed sparse factors: U1 recombines halves, U2 splits even/odd.
    const GaussMat4 u1{{{one, zero, one, zero},
                        {zero, one, zero, one},
                        {one, zero, mone, zero},
                        {zero, one, zero, mone}}};
    const GaussMat4 u2{{{one, one, zero, zero},
                        {zero, zero, one, i},
                        {one, mone, zero, zero},
                        {zero, zero, one, mi}}};

    FactorizationReport report;
    report.u1_nonzeros = nonzeros(u1);
    report.u2_nonzeros = nonzeros(u2);
    if (gmatmul(u2, u1) == f4) {
        report.product_matches = true;
        report.holding_order = "U2*U1";
    } else if (gmatmul(u1, u2) == f4) {
        report.product_matches = true;
        report.holding_order = "U1*U2";
    }

    // (F_4/2) is unitary iff F_4^dag F_4 == 4 I, checked exactly.
    GaussMat4 f4dag{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) f4dag[r][c] = {f4[c][r].re, -f4[c][r].im};
    const GaussMat4 gram = gmatmul(f4dag, f4);
    bool unitary = true;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            const Gauss expect = r == c ? Gauss{4, 0} : Gauss{};
            if (!(gram[r][c] == expect)) unitary = false;
        }
    report.f4_unitary_after_scaling = unitary;
    return report;
}

} // namespace qtones::spectral

#include "qtones/qft.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <regex>
#include <sstream>

namespace qtones::qft {

namespace {

constexpr double kPi = std::numbers::pi;

/// Nearest fraction p/q (q <= max_den) to x via continued fractions.
bool nearest_fraction(double x, long long max_den, long long* p_out, long long* q_out) {
    if (!std::isfinite(x) || std::abs(x) > 1e15) return false;
    const double sign = x < 0 ? -1.0 : 1.0;
    double v = std::abs(x);
    long long p0 = 1, q0 = 0, p1 = 0, q1 = 1; // convergents p0/q0 (prev), p1/q1 (before that)
    double rem = v;
    for (int iter = 0; iter < 64; ++iter) {
        const double fl = std::floor(rem);
        if (fl > 1e15) break;
        const long long a = static_cast<long long>(fl);
        const long long p = a * p0 + p1;
        const long long q = a * q0 + q1;
        if (q > max_den) break;
        p1 = p0;
        q1 = q0;
        p0 = p;
        q0 = q;
        const double frac = rem - fl;
        if (frac < 1e-15) break;
        rem = 1.0 / frac;
    }
    if (q0 == 0) return false;
    *p_out = static_cast<long long>(sign) * p0;
    *q_out = q0;
    return true;
}

std::string shortest_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// theta as a multiple of pi: an exact fraction when parsing it back
/// reproduces theta bit for bit, a shortest decimal otherwise.
std::string format_pi_multiple(double theta) {
    const double ratio = theta / kPi;
    long long p = 0, q = 1;
    if (nearest_fraction(ratio, 4096, &p, &q)) {
        const double candidate = kPi * (static_cast<double>(p) / static_cast<double>(q));
        if (candidate == theta) {
            if (q == 1) return std::to_string(p);
            return std::to_string(p) + "/" + std::to_string(q);
        }
    }
    return shortest_double(ratio);
}

double parse_pi_multiple(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const long long p = std::stoll(text.substr(0, slash));
            const long long q = std::stoll(text.substr(slash + 1));
            if (q == 0) throw ContractError("zero denominator in phase exponent");
            return kPi * (static_cast<double>(p) / static_cast<double>(q));
        }
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw ContractError("trailing characters in phase exponent");
        return kPi * v;
    } catch (const std::invalid_argument&) {
        throw ContractError("bad phase exponent '" + text + "'");
    } catch (const std::out_of_range&) {
        throw ContractError("phase exponent out of range '" + text + "'");
    }
}

} // namespace

double FourierConvention::factor(std::size_t n) const {
    switch (normalization) {
        case Normalization::Unitary:
            return 1.0 / std::sqrt(static_cast<double>(n));
        case Normalization::Plain:
            return 1.0;
        case Normalization::InverseN:
            return 1.0 / static_cast<double>(n);
    }
    throw ContractError("unknown normalization");
}

std::vector<Complex> roots_of_unity(std::size_t n, int sign) {
    if (n == 0) throw ContractError("roots_of_unity: n must be positive");
    if (sign != 1 && sign != -1) throw ContractError("sign must be +1 or -1");
    std::vector<Complex> roots(n);
    const double base = 2.0 * kPi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k)
        roots[k] = std::polar(1.0, sign * base * static_cast<double>(k));
    return roots;
}

ComplexMatrix dft_matrix(std::size_t n, const FourierConvention& convention) {
    if (n == 0) throw ContractError("dft_matrix: N must be positive");
    if (convention.sign != 1 && convention.sign != -1)
        throw ContractError("sign must be +1 or -1");
    ComplexMatrix m(n);
    const double scale = convention.factor(n);
    const double base = convention.sign * 2.0 * kPi / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            // Reduce the exponent mod N before touching floating point.
            const std::size_t e = (k * j) % n;
            m.at(k, j) = scale * std::polar(1.0, base * static_cast<double>(e));
        }
    }
    return m;
}

Circuit build_qft_circuit(const QftCircuitSpec& spec) {
    const int n = spec.n_qubits;
    if (n < 1) throw ContractError("QFT circuit needs at least one qubit");
    Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.append(gate::h(q));
        for (int qp = q + 1; qp < n; ++qp)
            c.append(gate::cphase(qp, q, std::ldexp(kPi, -(qp - q))));
    }
    if (spec.include_final_swaps) {
        for (int q = 0; q < n / 2; ++q) c.append(gate::swap(q, n - 1 - q));
    }
    return spec.inverse ? c.inverse() : c;
}

StateVector prepare_fourier_state(std::uint64_t j, int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ContractError("prepare_fourier_state: bad qubit count");
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (j >= dim)
        throw ContractError("prepare_fourier_state: index " + std::to_string(j) +
                            " out of range for " + std::to_string(n_qubits) + " qubits");
    // Wire q carries e^{2 pi i j / 2^(n-q)}; reduce j modulo the divisor so
    // the polar argument stays small and exact.
    std::vector<Complex> wire(static_cast<std::size_t>(n_qubits));
    for (int q = 0; q < n_qubits; ++q) {
        const std::uint64_t m = std::uint64_t{1} << (n_qubits - q);
        const double frac = static_cast<double>(j % m) / static_cast<double>(m);
        wire[static_cast<std::size_t>(q)] = std::polar(1.0, 2.0 * kPi * frac);
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> amps(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        Complex z{scale, 0.0};
        for (int q = 0; q < n_qubits; ++q) {
            if (b & (std::uint64_t{1} << (n_qubits - 1 - q))) z *= wire[static_cast<std::size_t>(q)];
        }
        amps[b] = z;
    }
    return StateVector(n_qubits, std::move(amps));
}

std::string render_decomposition(const Circuit& c) {
    if (c.gates().empty()) return "I";
    std::ostringstream out;
    bool first = true;
    const auto& gates = c.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (!first) out << ' ';
        first = false;
        std::visit(
            [&](const auto& g) {
                using T = std::decay_t<decltype(g)>;
                if constexpr (std::is_same_v<T, HGate>) {
                    out << "H_{" << g.target << "}";
                } else if constexpr (std::is_same_v<T, XGate>) {
                    out << "X_{" << g.target << "}";
                } else if constexpr (std::is_same_v<T, PhaseGate>) {
                    out << "P_{" << g.target << "}^{" << format_pi_multiple(g.theta) << "}";
                } else if constexpr (std::is_same_v<T, ControlledPhaseGate>) {
                    out << "C_{" << g.control << "}(P_{" << g.target << "}^{"
                        << format_pi_multiple(g.theta) << "})";
                } else if constexpr (std::is_same_v<T, SwapGate>) {
                    out << "SWAP_{" << g.a << "," << g.b << "}";
                }
            },
            *it);
    }
    return out.str();
}

Circuit parse_decomposition(const std::string& text, int n_qubits) {
    static const std::regex h_re(R"(H_\{(\d+)\})");
    static const std::regex x_re(R"(X_\{(\d+)\})");
    static const std::regex swap_re(R"(SWAP_\{(\d+),(\d+)\})");
    static const std::regex cp_re(R"(C_\{(\d+)\}\(P_\{(\d+)\}\^\{([^}]+)\}\))");
    static const std::regex p_re(R"(P_\{(\d+)\}\^\{([^}]+)\})");

    std::vector<std::string> tokens;
    std::istringstream in(text);
    for (std::string tok; in >> tok;) tokens.push_back(tok);

    if (tokens.size() == 1 && tokens[0] == "I") return Circuit(n_qubits);

    std::vector<Gate> gates;
    gates.reserve(tokens.size());
    std::smatch m;
    for (const std::string& tok : tokens) {
        if (std::regex_match(tok, m, h_re)) {
            gates.push_back(gate::h(std::stoi(m[1])));
        } else if (std::regex_match(tok, m, x_re)) {
            gates.push_back(gate::x(std::stoi(m[1])));
        } else if (std::regex_match(tok, m, swap_re)) {
            gates.push_back(gate::swap(std::stoi(m[1]), std::stoi(m[2])));
        } else if (std::regex_match(tok, m, cp_re)) {
            gates.push_back(gate::cphase(std::stoi(m[1]), std::stoi(m[2]), parse_pi_multiple(m[3])));
        } else if (std::regex_match(tok, m, p_re)) {
            gates.push_back(gate::phase(std::stoi(m[1]), parse_pi_multiple(m[2])));
        } else {
            throw ContractError("unparseable operator token '" + tok + "'");
        }
    }
    // The string lists the last-applied operator first.
    std::reverse(gates.begin(), gates.end());
    return Circuit(n_qubits, std::move(gates));
}

std::pair<StateVector, StateVector> relative_phase_demo() {
    const Circuit qft4 = build_qft_circuit({.n_qubits = 2});
    StateVector uniform(2, {Complex{0.5, 0.0}, Complex{0.5, 0.0}, Complex{0.5, 0.0},
                            Complex{0.5, 0.0}});
    // The ramp matched to omega = e^{+2 pi i / 4}: (1, -i, -1, i)/2.
    StateVector ramp(2, {Complex{0.5, 0.0}, Complex{0.0, -0.5}, Complex{-0.5, 0.0},
                         Complex{0.0, 0.5}});
    return {apply_circuit(uniform, qft4), apply_circuit(ramp, qft4)};
}

} // namespace qtones::qft

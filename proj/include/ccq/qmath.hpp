// Copyright 2026 The ccq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for one- and two-qubit operators.
 *
 * Two-qubit basis ordering is fixed project-wide as
 * |00>, |10>, |01>, |11>, where |mn> means qubit 1 in state m and qubit 2
 * in state n. Qubit 1 is therefore the low bit of the basis index
 * (index = m + 2n), and `kron(a, b)` places `a` on qubit 1.
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace ccq {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/**
 * @brief Square complex matrix of compile-time dimension, row-major.
 */
template <std::size_t N> struct Matrix {
    static_assert(N == 2 || N == 4, "only one- and two-qubit operators");
    static constexpr std::size_t dim = N;

    std::array<cplx, N * N> data{};

    constexpr cplx &operator()(std::size_t r, std::size_t c) {
        return data[r * N + c];
    }
    constexpr const cplx &operator()(std::size_t r, std::size_t c) const {
        return data[r * N + c];
    }

    static constexpr Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static constexpr Matrix diagonal(const std::array<cplx, N> &d) {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = d[i];
        }
        return m;
    }
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;
using Operator = Mat4;

template <std::size_t N>
Matrix<N> operator*(const Matrix<N> &a, const Matrix<N> &b) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) {
                continue;
            }
            for (std::size_t j = 0; j < N; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

template <std::size_t N>
Matrix<N> operator+(const Matrix<N> &a, const Matrix<N> &b) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N * N; ++i) {
        out.data[i] = a.data[i] + b.data[i];
    }
    return out;
}

template <std::size_t N>
Matrix<N> operator-(const Matrix<N> &a, const Matrix<N> &b) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N * N; ++i) {
        out.data[i] = a.data[i] - b.data[i];
    }
    return out;
}

template <std::size_t N> Matrix<N> operator*(cplx s, const Matrix<N> &a) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N * N; ++i) {
        out.data[i] = s * a.data[i];
    }
    return out;
}

template <std::size_t N>
Matrix<N> matmul(const Matrix<N> &a, const Matrix<N> &b) {
    return a * b;
}

template <std::size_t N> Matrix<N> adjoint(const Matrix<N> &a) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            out(i, j) = std::conj(a(j, i));
        }
    }
    return out;
}

template <std::size_t N> Matrix<N> conjugate(const Matrix<N> &a) {
    Matrix<N> out;
    for (std::size_t i = 0; i < N * N; ++i) {
        out.data[i] = std::conj(a.data[i]);
    }
    return out;
}

template <std::size_t N> cplx trace(const Matrix<N> &a) {
    cplx t{};
    for (std::size_t i = 0; i < N; ++i) {
        t += a(i, i);
    }
    return t;
}

/// Largest elementwise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N> &a, const Matrix<N> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N * N; ++i) {
        m = std::max(m, std::abs(a.data[i] - b.data[i]));
    }
    return m;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N> &a, double tol = 1e-12) {
    return max_abs_diff(a, adjoint(a)) <= tol;
}

/// max |U^dagger U - I| over entries.
template <std::size_t N> double unitarity_defect(const Matrix<N> &u) {
    return max_abs_diff(adjoint(u) * u, Matrix<N>::identity());
}

template <std::size_t N>
bool is_unitary(const Matrix<N> &u, double tol = 1e-12) {
    return unitarity_defect(u) <= tol;
}

/**
 * @brief |Tr(u^dagger v)| / dim. Equals 1 iff u = e^{i phi} v for unitaries.
 */
template <std::size_t N>
double fidelity_up_to_global_phase(const Matrix<N> &u, const Matrix<N> &v) {
    return std::abs(trace(adjoint(u) * v)) / static_cast<double>(N);
}

// Pauli matrices in the charge basis: sigma_z = |0><0| - |1><1|.
namespace pauli {
inline Mat2 I() { return Mat2::identity(); }
inline Mat2 X() {
    Mat2 m;
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}
inline Mat2 Y() {
    Mat2 m;
    m(0, 1) = -kI;
    m(1, 0) = kI;
    return m;
}
inline Mat2 Z() { return Mat2::diagonal({1.0, -1.0}); }
} // namespace pauli

/**
 * @brief Tensor product with `a` acting on qubit 1 and `b` on qubit 2.
 *
 * Entry ((m1 + 2 n1), (m2 + 2 n2)) = a(m1, m2) * b(n1, n2), matching the
 * |00>,|10>,|01>,|11> ordering.
 */
inline Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (std::size_t m1 = 0; m1 < 2; ++m1) {
        for (std::size_t n1 = 0; n1 < 2; ++n1) {
            for (std::size_t m2 = 0; m2 < 2; ++m2) {
                for (std::size_t n2 = 0; n2 < 2; ++n2) {
                    out(m1 + 2 * n1, m2 + 2 * n2) = a(m1, m2) * b(n1, n2);
                }
            }
        }
    }
    return out;
}

/// Qubit index, 1 or 2.
enum class Qubit : int { One = 1, Two = 2 };

inline Qubit other(Qubit q) { return q == Qubit::One ? Qubit::Two : Qubit::One; }

inline Qubit qubit_from_int(int q) {
    if (q != 1 && q != 2) {
        throw std::invalid_argument("qubit index must be 1 or 2, got " +
                                    std::to_string(q));
    }
    return static_cast<Qubit>(q);
}

inline int to_int(Qubit q) { return static_cast<int>(q); }

/// Single-qubit operator placed on qubit `q`, identity on the other.
inline Mat4 embed(const Mat2 &op, Qubit q) {
    return q == Qubit::One ? kron(op, pauli::I()) : kron(pauli::I(), op);
}

inline Mat4 sigma_zz() { return kron(pauli::Z(), pauli::Z()); }

/**
 * @brief Eigendecomposition h = V diag(w) V^dagger of a Hermitian matrix.
 */
template <std::size_t N> struct HermitianEigen {
    std::array<double, N> values{};
    Matrix<N> vectors; // columns are eigenvectors
};

/**
 * @brief Cyclic complex Jacobi diagonalisation.
 *
 * Each pivot (p, q) is first made real by a phase on column q and then
 * annihilated by a real Givens rotation. Converges quadratically; at
 * dim <= 4 a handful of sweeps reaches machine precision.
 */
template <std::size_t N>
HermitianEigen<N> eigh(const Matrix<N> &h, double herm_tol = 1e-10) {
    if (!is_hermitian(h, herm_tol)) {
        throw std::invalid_argument("eigh: matrix is not Hermitian");
    }
    Matrix<N> a = h;
    Matrix<N> v = Matrix<N>::identity();

    double scale = 0.0;
    for (const auto &x : a.data) {
        scale = std::max(scale, std::abs(x));
    }
    if (scale == 0.0) {
        return {{}, v};
    }

    constexpr int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                off += std::norm(a(p, q));
            }
        }
        if (std::sqrt(off) <= 1e-17 * scale) {
            break;
        }
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double g = std::abs(a(p, q));
                if (g <= 1e-300) {
                    continue;
                }
                const cplx phase = a(p, q) / g;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Rotation J = W R with W = diag(1, conj(phase)) on (p, q)
                // and R = [[c, s], [-s, c]].
                Matrix<N> j = Matrix<N>::identity();
                j(p, p) = c;
                j(p, q) = s;
                j(q, p) = -s * std::conj(phase);
                j(q, q) = c * std::conj(phase);

                a = adjoint(j) * a * j;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                v = v * j;
            }
        }
    }

    HermitianEigen<N> out;
    for (std::size_t i = 0; i < N; ++i) {
        out.values[i] = a(i, i).real();
    }
    out.vectors = v;
    return out;
}

/**
 * @brief exp(scale * h) for Hermitian h via eigendecomposition.
 *
 * With purely imaginary scale the result is unitary to rounding, since
 * it is assembled as V diag(e^{scale w}) V^dagger with unitary V.
 */
template <std::size_t N>
Matrix<N> expm_hermitian(const Matrix<N> &h, cplx scale) {
    const auto eig = eigh(h);
    std::array<cplx, N> d{};
    for (std::size_t i = 0; i < N; ++i) {
        d[i] = std::exp(scale * eig.values[i]);
    }
    return eig.vectors * Matrix<N>::diagonal(d) * adjoint(eig.vectors);
}

/// exp(i * phi * sigma) for a Pauli-like involution (sigma^2 = I).
template <std::size_t N>
Matrix<N> exp_involution(const Matrix<N> &sigma, double phi) {
    return cplx{std::cos(phi)} * Matrix<N>::identity() +
           cplx{0.0, std::sin(phi)} * sigma;
}

/**
 * @brief Two-qubit pure state, amplitudes ordered |00>,|10>,|01>,|11>.
 */
struct StateVector {
    std::array<cplx, 4> amp{};

    static StateVector basis(int m, int n) {
        if ((m != 0 && m != 1) || (n != 0 && n != 1)) {
            throw std::invalid_argument("basis state labels must be 0 or 1");
        }
        StateVector s;
        s.amp[static_cast<std::size_t>(m + 2 * n)] = 1.0;
        return s;
    }

    cplx &operator[](std::size_t i) { return amp[i]; }
    const cplx &operator[](std::size_t i) const { return amp[i]; }

    [[nodiscard]] double norm_squared() const {
        double s = 0.0;
        for (const auto &a : amp) {
            s += std::norm(a);
        }
        return s;
    }

    [[nodiscard]] bool is_normalized(double tol = 1e-10) const {
        return std::abs(norm_squared() - 1.0) <= tol;
    }

    [[nodiscard]] StateVector normalized() const {
        const double n = std::sqrt(norm_squared());
        if (n == 0.0) {
            throw std::invalid_argument("cannot normalise the zero vector");
        }
        StateVector s = *this;
        for (auto &a : s.amp) {
            a /= n;
        }
        return s;
    }
};

inline StateVector operator*(const Mat4 &u, const StateVector &s) {
    StateVector out;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            out.amp[i] += u(i, j) * s.amp[j];
        }
    }
    return out;
}

inline cplx inner(const StateVector &a, const StateVector &b) {
    cplx s{};
    for (std::size_t i = 0; i < 4; ++i) {
        s += std::conj(a.amp[i]) * b.amp[i];
    }
    return s;
}

inline cplx expectation(const Mat4 &op, const StateVector &s) {
    return inner(s, op * s);
}

inline void require_normalized(const StateVector &s, const char *what) {
    if (!s.is_normalized()) {
        throw std::invalid_argument(std::string(what) +
                                    ": state is not normalised");
    }
}

/// ||a - e^{i phi} b|| minimised over the global phase phi.
inline double distance_up_to_global_phase(const StateVector &a,
                                          const StateVector &b) {
    const cplx ov = inner(b, a);
    const cplx phase = std::abs(ov) > 0.0 ? ov / std::abs(ov) : cplx{1.0};
    double d = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        d += std::norm(a.amp[i] - phase * b.amp[i]);
    }
    return std::sqrt(d);
}

} // namespace ccq

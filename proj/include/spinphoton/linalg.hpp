#pragma once

#include <array>
#include <complex>
#include <cstddef>

// Small dense complex matrices for the 2x2 (single qubit) and 4x4
// (matter x photon-qubit) Hilbert spaces.  Row-major storage, value
// semantics throughout.

namespace spinphoton {

using cx = std::complex<double>;

struct CMat2 {
    std::array<cx, 4> m{};

    cx& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
    const cx& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

    static CMat2 identity();
    static CMat2 zero() { return CMat2{}; }

    CMat2 adjoint() const;
    cx trace() const { return m[0] + m[3]; }
};

struct CMat4 {
    std::array<cx, 16> m{};

    cx& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
    const cx& operator()(int r, int c) const { return m[static_cast<std::size_t>(4 * r + c)]; }

    static CMat4 identity();
    static CMat4 zero() { return CMat4{}; }

    CMat4 adjoint() const;
    cx trace() const { return m[0] + m[5] + m[10] + m[15]; }
};

// Length-4 complex state vector in the ordered basis
// {|0 e1>, |0 e2>, |1 e1>, |1 e2>} (matter index slow, photon index fast).
struct StateVector4 {
    std::array<cx, 4> amp{};

    double norm() const;
};

CMat2 operator+(const CMat2& a, const CMat2& b);
CMat2 operator*(const CMat2& a, const CMat2& b);
CMat2 operator*(cx s, const CMat2& a);
CMat4 operator+(const CMat4& a, const CMat4& b);
CMat4 operator-(const CMat4& a, const CMat4& b);
CMat4 operator*(const CMat4& a, const CMat4& b);
CMat4 operator*(cx s, const CMat4& a);

cx inner(const StateVector4& a, const StateVector4& b);
StateVector4 apply(const CMat4& M, const StateVector4& v);

// |a><b|
CMat4 outer(const StateVector4& a, const StateVector4& b);

// Kronecker product, first factor indexes the 2x2 blocks.
CMat4 kron(const CMat2& a, const CMat2& b);

// max_ij |A_ij - B_ij|
double max_abs_diff(const CMat4& a, const CMat4& b);
double max_abs(const CMat4& a);

// max_ij |A_ij - conj(A_ji)|
double hermiticity_error(const CMat4& a);
double hermiticity_error(const CMat2& a);

// Pauli matrices sigma_0 (identity), sigma_x, sigma_y, sigma_z.
const CMat2& pauli(int i);

}  // namespace spinphoton

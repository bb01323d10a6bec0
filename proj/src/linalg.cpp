#include "spinphoton/linalg.hpp"

#include <cmath>

namespace spinphoton {

CMat2 CMat2::identity() {
    CMat2 out;
    out(0, 0) = 1.0;
    out(1, 1) = 1.0;
    return out;
}

CMat2 CMat2::adjoint() const {
    CMat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
}

CMat4 CMat4::identity() {
    CMat4 out;
    for (int i = 0; i < 4; ++i) out(i, i) = 1.0;
    return out;
}

CMat4 CMat4::adjoint() const {
    CMat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = std::conj((*this)(c, r));
    return out;
}

double StateVector4::norm() const {
    double s = 0.0;
    for (const cx& a : amp) s += std::norm(a);
    return std::sqrt(s);
}

CMat2 operator+(const CMat2& a, const CMat2& b) {
    CMat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.m[i] = a.m[i] + b.m[i];
    return out;
}

CMat2 operator*(const CMat2& a, const CMat2& b) {
    CMat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            cx s = 0.0;
            for (int k = 0; k < 2; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

CMat2 operator*(cx s, const CMat2& a) {
    CMat2 out;
    for (std::size_t i = 0; i < 4; ++i) out.m[i] = s * a.m[i];
    return out;
}

CMat4 operator+(const CMat4& a, const CMat4& b) {
    CMat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.m[i] = a.m[i] + b.m[i];
    return out;
}

CMat4 operator-(const CMat4& a, const CMat4& b) {
    CMat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.m[i] = a.m[i] - b.m[i];
    return out;
}

CMat4 operator*(const CMat4& a, const CMat4& b) {
    CMat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            cx s = 0.0;
            for (int k = 0; k < 4; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

CMat4 operator*(cx s, const CMat4& a) {
    CMat4 out;
    for (std::size_t i = 0; i < 16; ++i) out.m[i] = s * a.m[i];
    return out;
}

cx inner(const StateVector4& a, const StateVector4& b) {
    cx s = 0.0;
    for (std::size_t i = 0; i < 4; ++i) s += std::conj(a.amp[i]) * b.amp[i];
    return s;
}

StateVector4 apply(const CMat4& M, const StateVector4& v) {
    StateVector4 out;
    for (int r = 0; r < 4; ++r) {
        cx s = 0.0;
        for (int c = 0; c < 4; ++c) s += M(r, c) * v.amp[static_cast<std::size_t>(c)];
        out.amp[static_cast<std::size_t>(r)] = s;
    }
    return out;
}

CMat4 outer(const StateVector4& a, const StateVector4& b) {
    CMat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            out(r, c) = a.amp[static_cast<std::size_t>(r)] * std::conj(b.amp[static_cast<std::size_t>(c)]);
    return out;
}

CMat4 kron(const CMat2& a, const CMat2& b) {
    CMat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

double max_abs_diff(const CMat4& a, const CMat4& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.m[i] - b.m[i]));
    return m;
}

double max_abs(const CMat4& a) {
    double m = 0.0;
    for (const cx& e : a.m) m = std::max(m, std::abs(e));
    return m;
}

double hermiticity_error(const CMat4& a) {
    double m = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
    return m;
}

double hermiticity_error(const CMat2& a) {
    double m = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m = std::max(m, std::abs(a(r, c) - std::conj(a(c, r))));
    return m;
}

const CMat2& pauli(int i) {
    static const std::array<CMat2, 4> sig = [] {
        std::array<CMat2, 4> s{};
        s[0] = CMat2::identity();
        s[1](0, 1) = 1.0;
        s[1](1, 0) = 1.0;
        s[2](0, 1) = cx(0.0, -1.0);
        s[2](1, 0) = cx(0.0, 1.0);
        s[3](0, 0) = 1.0;
        s[3](1, 1) = -1.0;
        return s;
    }();
    return sig[static_cast<std::size_t>(i)];
}

}  // namespace spinphoton

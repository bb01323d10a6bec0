#include "spinphoton/eigen4.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinphoton {

namespace {

double offdiag_norm(const CMat4& a) {
    double s = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// Unitary that diagonalises the (p,q) 2x2 Hermitian block, applied in
// place to A (A <- U^dag A U) and accumulated into V (V <- V U).
void jacobi_rotate(CMat4& a, CMat4& v, int p, int q) {
    const cx apq = a(p, q);
    const double d = std::abs(apq);
    if (d == 0.0) return;

    const cx phase = apq / d;  // e^{i phi_h}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * d);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // U = diag-embedded [[c*phase, s*phase], [-s, c]] on the (p,q) plane.
    const cx upp = c * phase;
    const cx upq = s * phase;
    const cx uqp = -s;
    const cx uqq = c;

    for (int k = 0; k < 4; ++k) {  // columns: A <- A U
        const cx akp = a(k, p);
        const cx akq = a(k, q);
        a(k, p) = akp * upp + akq * uqp;
        a(k, q) = akp * upq + akq * uqq;
    }
    for (int k = 0; k < 4; ++k) {  // rows: A <- U^dag A
        const cx apk = a(p, k);
        const cx aqk = a(q, k);
        a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
        a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
    }
    for (int k = 0; k < 4; ++k) {
        const cx vkp = v(k, p);
        const cx vkq = v(k, q);
        v(k, p) = vkp * upp + vkq * uqp;
        v(k, q) = vkp * upq + vkq * uqq;
    }

    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = cx(a(p, p).real(), 0.0);
    a(q, q) = cx(a(q, q).real(), 0.0);
}

void phase_fix(StateVector4& v) {
    std::size_t k = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double m = std::abs(v.amp[i]);
        if (m > best) {
            best = m;
            k = i;
        }
    }
    if (best == 0.0) return;
    const cx rot = std::conj(v.amp[k]) / best;
    for (cx& a : v.amp) a *= rot;
    v.amp[k] = cx(std::abs(v.amp[k]), 0.0);
}

bool lex_less(const StateVector4& a, const StateVector4& b) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (a.amp[i].real() != b.amp[i].real()) return a.amp[i].real() < b.amp[i].real();
        if (a.amp[i].imag() != b.amp[i].imag()) return a.amp[i].imag() < b.amp[i].imag();
    }
    return false;
}

}  // namespace

EigenSystem4 hermitian_eigs(const CMat4& M) {
    const double scale = std::max(1.0, max_abs(M));
    if (hermiticity_error(M) > 1e-10 * scale)
        throw std::invalid_argument("hermitian_eigs: matrix is not Hermitian");

    // Symmetrise to kill representation noise below the tolerance.
    CMat4 a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a(r, c) = 0.5 * (M(r, c) + std::conj(M(c, r)));

    CMat4 v = CMat4::identity();
    const double tol = 1e-13 * scale;
    for (int sweep = 0; sweep < 60 && offdiag_norm(a) > tol; ++sweep) {
        for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) jacobi_rotate(a, v, p, q);
    }

    EigenSystem4 out;
    std::array<int, 4> idx{0, 1, 2, 3};
    std::array<StateVector4, 4> vecs;
    for (int j = 0; j < 4; ++j) {
        for (int r = 0; r < 4; ++r) vecs[static_cast<std::size_t>(j)].amp[static_cast<std::size_t>(r)] = v(r, j);
        phase_fix(vecs[static_cast<std::size_t>(j)]);
    }
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        const double li = a(i, i).real();
        const double lj = a(j, j).real();
        if (std::abs(li - lj) > 1e-12) return li < lj;
        return lex_less(vecs[static_cast<std::size_t>(i)], vecs[static_cast<std::size_t>(j)]);
    });
    for (int j = 0; j < 4; ++j) {
        out.eigenvalues[static_cast<std::size_t>(j)] = a(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(j)]).real();
        out.eigenvectors[static_cast<std::size_t>(j)] = vecs[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])];
    }
    return out;
}

}  // namespace spinphoton

#include "uin/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace uin {

namespace {

constexpr double kOffTol = 1e-13;  // relative off-diagonal threshold
constexpr int kMaxSweeps = 60;

// Smaller-magnitude root of t^2 + 2*zeta*t - 1 = 0 (the classical Jacobi
// tangent), sign chosen to match zeta.
double jacobi_tangent(double zeta) {
    if (zeta == 0.0) return 1.0;
    const double s = std::sqrt(1.0 + zeta * zeta);
    return (zeta > 0.0) ? 1.0 / (zeta + s) : -1.0 / (-zeta + s);
}

// Orthonormal completion: fill zero-norm columns of U with canonical basis
// vectors orthogonalized against the existing columns.
void complete_frame(Matrix& u, std::vector<bool>& filled) {
    const std::size_t n = u.rows();
    for (std::size_t j = 0; j < u.cols(); ++j) {
        if (filled[j]) continue;
        for (std::size_t cand = 0; cand < n; ++cand) {
            std::vector<cdouble> v(n, 0.0);
            v[cand] = 1.0;
            // two Gram-Schmidt passes against all already-set columns
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < u.cols(); ++k) {
                    if (!filled[k]) continue;
                    cdouble dot = 0.0;
                    for (std::size_t i = 0; i < n; ++i) dot += std::conj(u(i, k)) * v[i];
                    for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u(i, k);
                }
            }
            double nrm = 0.0;
            for (const auto& x : v) nrm += std::norm(x);
            nrm = std::sqrt(nrm);
            if (nrm > 1e-6) {
                for (auto& x : v) x /= nrm;
                u.set_column(j, v);
                filled[j] = true;
                break;
            }
        }
    }
}

}  // namespace

SvdResult svd_finite(const Matrix& F) {
    if (!F.square()) throw std::invalid_argument("svd_finite: matrix must be square");
    if (!F.is_finite()) throw std::invalid_argument("svd_finite: NaN/Inf entry");

    const std::size_t n = F.rows();
    SvdResult out;
    if (n == 0) {
        out.U = Matrix(0, 0);
        out.V = Matrix(0, 0);
        return out;
    }

    Matrix a = F;                    // columns get rotated in place
    Matrix v = Matrix::identity(n);  // accumulated right rotations

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double app = 0.0, aqq = 0.0;
                cdouble apq = 0.0;
                for (std::size_t i = 0; i < n; ++i) {
                    app += std::norm(a(i, p));
                    aqq += std::norm(a(i, q));
                    apq += std::conj(a(i, p)) * a(i, q);
                }
                const double mag = std::abs(apq);
                if (app == 0.0 || aqq == 0.0 || mag <= kOffTol * std::sqrt(app * aqq)) continue;

                rotated = true;
                const cdouble phase = apq / mag;  // e^{i phi}
                const double zeta = (aqq - app) / (2.0 * mag);
                const double t = jacobi_tangent(zeta);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // [u, v] <- [u, v] * [[c, s*phase], [-s*conj(phase), c]]
                const cdouble sp = s * phase;
                const cdouble spc = s * std::conj(phase);
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble up = a(i, p), uq = a(i, q);
                    a(i, p) = c * up - spc * uq;
                    a(i, q) = sp * up + c * uq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - spc * vq;
                    v(i, q) = sp * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    // column norms are the singular values
    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::norm(a(i, j));
        sigma[j] = std::sqrt(s);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    const double scale = sigma.empty() ? 0.0 : sigma[order[0]];
    const double rank_tol = 1e-13 * std::max(1.0, scale);

    Matrix u(n, n), vperm(n, n);
    std::vector<double> values(n);
    std::vector<bool> filled(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        values[j] = sigma[src];
        for (std::size_t i = 0; i < n; ++i) vperm(i, j) = v(i, src);
        if (sigma[src] > rank_tol) {
            for (std::size_t i = 0; i < n; ++i) u(i, j) = a(i, src) / sigma[src];
            filled[j] = true;
        }
    }
    complete_frame(u, filled);

    out.values = std::move(values);
    out.U = std::move(u);
    out.V = std::move(vperm);
    return out;
}

std::vector<double> singular_values_of(const Matrix& F) { return svd_finite(F).values; }

std::vector<double> hermitian_eigenvalues(const Matrix& H) {
    if (!H.square()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    if (!H.is_finite()) throw std::invalid_argument("hermitian_eigenvalues: NaN/Inf entry");

    const std::size_t n = H.rows();
    if (n == 0) return {};
    Matrix a = hermitian_part(H);
    const double scale = std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-15 * scale) continue;

                rotated = true;
                const cdouble phase = apq / mag;
                const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = jacobi_tangent(zeta);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cdouble sp = s * phase;
                const cdouble spc = s * std::conj(phase);

                // columns: A <- A * R
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble xp = a(i, p), xq = a(i, q);
                    a(i, p) = c * xp - spc * xq;
                    a(i, q) = sp * xp + c * xq;
                }
                // rows: A <- R^H * A
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble xp = a(p, i), xq = a(q, i);
                    a(p, i) = c * xp - sp * xq;
                    a(q, i) = spc * xp + c * xq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
        if (!rotated) break;
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace uin

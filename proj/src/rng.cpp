#include "uin/rng.hpp"

#include <cmath>
#include <numbers>

namespace uin {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on raw uniform bits
    double u = uniform();
    if (u < 1e-300) u = 1e-300;
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    const double a = 2.0 * std::numbers::pi * v;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
}

cdouble Rng::unimodular() {
    const double a = 2.0 * std::numbers::pi * uniform();
    return {std::cos(a), std::sin(a)};
}

std::vector<cdouble> Rng::unit_vector(std::size_t n) {
    std::vector<cdouble> v(n);
    double nrm = 0.0;
    do {
        nrm = 0.0;
        for (auto& x : v) {
            x = gaussian_complex();
            nrm += std::norm(x);
        }
    } while (nrm < 1e-12);
    nrm = std::sqrt(nrm);
    for (auto& x : v) x /= nrm;
    return v;
}

Matrix Rng::gaussian_matrix(std::size_t rows, std::size_t cols, double scale) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = scale * gaussian_complex();
    return m;
}

Matrix Rng::hermitian_matrix(std::size_t n, double scale) {
    return hermitian_part(gaussian_matrix(n, n, scale));
}

Matrix Rng::psd_matrix(std::size_t n, double scale) {
    const Matrix g = gaussian_matrix(n, n, scale);
    return g.adjoint() * g;
}

Matrix Rng::unitary(std::size_t n) {
    if (n == 0) return Matrix(0, 0);
    Matrix q = gaussian_matrix(n, n);
    // modified Gram-Schmidt, two passes
    for (std::size_t j = 0; j < n; ++j) {
        auto col = q.column(j);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cdouble dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * col[i];
                for (std::size_t i = 0; i < n; ++i) col[i] -= dot * q(i, k);
            }
        }
        double nrm = 0.0;
        for (const auto& x : col) nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-10) {
            // astronomically unlikely; restart the column from a basis vector
            std::fill(col.begin(), col.end(), cdouble(0.0, 0.0));
            col[j] = 1.0;
            for (std::size_t k = 0; k < j; ++k) {
                cdouble dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(q(i, k)) * col[i];
                for (std::size_t i = 0; i < n; ++i) col[i] -= dot * q(i, k);
            }
            nrm = 0.0;
            for (const auto& x : col) nrm += std::norm(x);
            nrm = std::sqrt(nrm);
        }
        // fix the phase so the distribution is Haar
        const cdouble d = col[j];
        const cdouble phase = (std::abs(d) > 1e-14) ? d / std::abs(d) : cdouble(1.0, 0.0);
        for (auto& x : col) x /= (nrm * phase);
        q.set_column(j, col);
    }
    return q;
}

Matrix Rng::frame(std::size_t dim, std::size_t n) { return unitary(dim).columns(0, n); }

}  // namespace uin

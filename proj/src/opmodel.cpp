#include "uin/opmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uin/rng.hpp"

namespace uin {

TailOperator::TailOperator(Matrix F, cdouble tau) : F_(std::move(F)), tau_(tau) {
    if (!F_.square()) throw std::invalid_argument("TailOperator: block must be square");
    if (!F_.is_finite() || !std::isfinite(tau_.real()) || !std::isfinite(tau_.imag()))
        throw std::invalid_argument("TailOperator: NaN/Inf entry");
}

TailOperator TailOperator::diag_op(std::span<const cdouble> d, cdouble tau) {
    return TailOperator(Matrix::diag(d), tau);
}

TailOperator TailOperator::diag_op(std::span<const double> d, cdouble tau) {
    return TailOperator(Matrix::diag(d), tau);
}

TailOperator TailOperator::padded(std::size_t extra) const {
    const std::size_t m = block_size();
    Matrix g(m + extra, m + extra);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(i, j) = F_(i, j);
    for (std::size_t i = m; i < m + extra; ++i) g(i, i) = tau_;
    return TailOperator(std::move(g), tau_);
}

TailOperator TailOperator::padded_to(std::size_t m) const {
    if (m < block_size()) throw std::invalid_argument("padded_to: cannot shrink block");
    return padded(m - block_size());
}

bool TailOperator::is_zero(double tol) const {
    return F_.max_abs() <= tol && std::abs(tau_) <= tol;
}

TailOperator operator+(const TailOperator& a, const TailOperator& b) {
    const std::size_t m = std::max(a.block_size(), b.block_size());
    return TailOperator(a.padded_to(m).block() + b.padded_to(m).block(), a.tail() + b.tail());
}

TailOperator operator-(const TailOperator& a, const TailOperator& b) {
    const std::size_t m = std::max(a.block_size(), b.block_size());
    return TailOperator(a.padded_to(m).block() - b.padded_to(m).block(), a.tail() - b.tail());
}

TailOperator operator*(const TailOperator& a, const TailOperator& b) {
    const std::size_t m = std::max(a.block_size(), b.block_size());
    return TailOperator(a.padded_to(m).block() * b.padded_to(m).block(), a.tail() * b.tail());
}

TailOperator operator*(cdouble s, const TailOperator& a) {
    Matrix f = a.block();
    f *= s;
    return TailOperator(std::move(f), s * a.tail());
}

TailOperator operator*(double s, const TailOperator& a) { return cdouble(s, 0.0) * a; }

bool approx_equal(const TailOperator& a, const TailOperator& b, double tol) {
    return distance_max_abs(a, b) <= tol;
}

double distance_max_abs(const TailOperator& a, const TailOperator& b) {
    const std::size_t m = std::max(a.block_size(), b.block_size());
    const double block = max_abs_diff(a.padded_to(m).block(), b.padded_to(m).block());
    return std::max(block, std::abs(a.tail() - b.tail()));
}

SingularSpectrum singular_values(const TailOperator& a, std::size_t n) {
    if (n == 0) throw std::invalid_argument("singular_values: n must be positive");
    const std::vector<double> fs = singular_values_of(a.block());
    const double t = std::abs(a.tail());
    SingularSpectrum out;
    out.tail_value = t;
    out.values.reserve(n);
    std::size_t i = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (i < fs.size() && fs[i] >= t)
            out.values.push_back(fs[i++]);
        else
            out.values.push_back(t);
    }
    return out;
}

double spectral_norm(const TailOperator& a) { return singular_values(a, 1).values[0]; }

namespace {

// lambda_max and -lambda_min of (e^{i t} F + e^{-i t} F^*)/2
std::pair<double, double> radius_branches(const Matrix& F, double theta) {
    const cdouble w(std::cos(theta), std::sin(theta));
    Matrix h(F.rows(), F.cols());
    for (std::size_t i = 0; i < F.rows(); ++i)
        for (std::size_t j = 0; j < F.cols(); ++j)
            h(i, j) = 0.5 * (w * F(i, j) + std::conj(w * F(j, i)));
    const std::vector<double> eig = hermitian_eigenvalues(h);
    return {eig.front(), -eig.back()};
}

double golden_max(const Matrix& F, bool upper_branch, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    auto value = [&](double t) {
        const auto [up, dn] = radius_branches(F, t);
        return upper_branch ? up : dn;
    };
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = value(x1), f2 = value(x2);
    for (int it = 0; it < 64; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = value(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = value(x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

double numerical_radius(const TailOperator& a) {
    const double tail = std::abs(a.tail());
    const std::size_t m = a.block_size();
    if (m == 0 || a.block().max_abs() == 0.0) return tail;
    if (m == 1) {
        // numerical range of a scalar block is the point itself
        return std::max(tail, std::abs(a.block()(0, 0)));
    }

    constexpr int kGrid = 720;
    const double step = std::numbers::pi / kGrid;
    double best = 0.0;
    int best_i = 0;
    bool best_upper = true;
    for (int i = 0; i < kGrid; ++i) {
        const auto [up, dn] = radius_branches(a.block(), i * step);
        if (up > best) {
            best = up;
            best_i = i;
            best_upper = true;
        }
        if (dn > best) {
            best = dn;
            best_i = i;
            best_upper = false;
        }
    }
    const double refined = golden_max(a.block(), best_upper, (best_i - 1) * step,
                                      (best_i + 1) * step);
    return std::max(tail, std::max(best, refined));
}

bool is_maximal_partial_isometry(const TailOperator& a, double tol) {
    if (std::abs(std::abs(a.tail()) - 1.0) > tol) return false;
    const Matrix& f = a.block();
    if (f.rows() == 0) return true;
    const Matrix id = Matrix::identity(f.rows());
    return max_abs_diff(f.adjoint() * f, id) <= tol || max_abs_diff(f * f.adjoint(), id) <= tol;
}

double compression_lower_bound(const TailOperator& a, const SymmetricNorm& f,
                               std::size_t trials, Rng& rng) {
    if (trials == 0) throw std::invalid_argument("compression_lower_bound: trials must be >= 1");
    const std::size_t n = f.arity();
    // pad by n so the tail contributes n slots; every n-frame now fits
    const Matrix work = a.padded(n).block();
    const std::size_t dim = work.rows();

    auto compressed = [&](const Matrix& x, const Matrix& y) {
        const Matrix c = x.adjoint() * (work * y);
        return f.eval(singular_values_of(c));
    };

    // seed with the singular frames: attains the norm for this model
    const SvdResult dec = svd_finite(work);
    double best = compressed(dec.U.columns(0, n), dec.V.columns(0, n));
    for (std::size_t t = 1; t < trials; ++t)
        best = std::max(best, compressed(rng.frame(dim, n), rng.frame(dim, n)));
    return best;
}

}  // namespace uin

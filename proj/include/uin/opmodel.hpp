#pragma once

#include <vector>

#include "uin/matrix.hpp"
#include "uin/svd.hpp"
#include "uin/vecnorm.hpp"

namespace uin {

class Rng;

// Top singular values of an operator, descending. tail_value = |tau| is the
// value attained with infinite multiplicity.
struct SingularSpectrum {
    std::vector<double> values;
    double tail_value = 0.0;
};

// The operator A = F (+) tau*I: a finite m x m complex block acting on the
// first m coordinates plus the scalar tau on an infinite-dimensional
// complement. Padding by k replaces (m, F, tau) with (m+k, F (+) tau*I_k, tau)
// and leaves every derived quantity unchanged; binary operations pad both
// operands to a common block size first.
class TailOperator {
public:
    TailOperator() : F_(0, 0), tau_(0.0) {}
    TailOperator(Matrix F, cdouble tau);

    static TailOperator scalar_tail(cdouble tau) { return TailOperator(Matrix(0, 0), tau); }
    static TailOperator identity() { return scalar_tail(1.0); }
    static TailOperator diag_op(std::span<const cdouble> d, cdouble tau);
    static TailOperator diag_op(std::span<const double> d, cdouble tau);

    const Matrix& block() const { return F_; }
    cdouble tail() const { return tau_; }
    std::size_t block_size() const { return F_.rows(); }

    TailOperator padded(std::size_t extra) const;
    TailOperator padded_to(std::size_t m) const;

    TailOperator adjoint() const { return TailOperator(F_.adjoint(), std::conj(tau_)); }
    TailOperator transpose() const { return TailOperator(F_.transpose(), tau_); }

    bool is_zero(double tol = 0.0) const;

private:
    Matrix F_;
    cdouble tau_;
};

TailOperator operator+(const TailOperator& a, const TailOperator& b);
TailOperator operator-(const TailOperator& a, const TailOperator& b);
TailOperator operator*(const TailOperator& a, const TailOperator& b);
TailOperator operator*(cdouble s, const TailOperator& a);
TailOperator operator*(double s, const TailOperator& a);

// entrywise comparison after padding to a common block size
bool approx_equal(const TailOperator& a, const TailOperator& b, double tol);
double distance_max_abs(const TailOperator& a, const TailOperator& b);

// Top n singular values: the descending merge of the finite block's singular
// values with |tau| at infinite multiplicity (finite values below |tau| are
// pushed out by the tail and never appear).
SingularSpectrum singular_values(const TailOperator& a, std::size_t n);

double spectral_norm(const TailOperator& a);

// Numerical radius max(r(F), |tau|); r(F) found by a 720-point sweep of
// lambda_max((e^{i t} F + e^{-i t} F^*)/2) over both half-turn branches plus
// golden-section refinement (deterministic, ~1e-9 accurate for m <= 32).
double numerical_radius(const TailOperator& a);

// A*A = I or AA* = I within tol, entrywise on the block, |tau| = 1 within tol.
bool is_maximal_partial_isometry(const TailOperator& a, double tol = 1e-9);

// Largest f(s(X^* A Y)) over sampled n-frame pairs, n = f.arity(). The sample
// is seeded with the singular frames of the block padded by n, so the bound
// is attained for this operator model; random frames only add lower values.
double compression_lower_bound(const TailOperator& a, const SymmetricNorm& f,
                               std::size_t trials, Rng& rng);

}  // namespace uin

#pragma once

#include <functional>
#include <optional>
#include <string>

#include "uin/certificate.hpp"
#include "uin/opmodel.hpp"
#include "uin/vecnorm.hpp"

namespace uin {

class Rng;

enum class Phi { Id, Transpose, Adjoint, AdjointTranspose };

const char* to_string(Phi phi);
TailOperator apply_phi(Phi phi, const TailOperator& a);

// The canonical distance-preserving map A -> U^* phi(A) V + R0 with unitary
// U, V (unitary block, unimodular tail). Construction rejects non-unitary
// U or V outright.
class IsometryForm {
public:
    IsometryForm(TailOperator u, TailOperator v, Phi phi, TailOperator r0, double tol = 1e-9);

    const TailOperator& u() const { return u_; }
    const TailOperator& v() const { return v_; }
    Phi phi() const { return phi_; }
    const TailOperator& r0() const { return r0_; }

private:
    TailOperator u_, v_;
    Phi phi_;
    TailOperator r0_;
};

TailOperator apply(const IsometryForm& map, const TailOperator& a);

// |  ||A - B||_f - ||L(A) - L(B)||_f  | <= tol over `pairs` random pairs.
Certificate verify_distance_preserving(const IsometryForm& map, const SymmetricNorm& f,
                                       std::size_t pairs, Rng& rng, double tol = 1e-9);

struct RecoverResult {
    bool ok = false;
    std::optional<IsometryForm> form;
    double residual = 0.0;  // max spectral deviation on validation inputs
    std::string message;
};

// Probe-based parameter recovery for a black-box map on block-size-m
// operators promised to be of canonical form with tau-trivial R0. R0 comes
// from the zero probe, phi from a linearity test plus the matrix-unit
// product pattern, U and V columnwise from rank-one images; the result is
// validated on 50 fresh random inputs (spectral deviation and f-distance
// preservation, both to 1e-6) and an explicit failure verdict is returned
// when the oracle is not of canonical form.
RecoverResult recover(const std::function<TailOperator(const TailOperator&)>& oracle,
                      std::size_t m, const SymmetricNorm& f);

// min over a joint phase of the summed block Frobenius distances between the
// (U, V) pairs of two forms.
double phase_quotient_distance(const IsometryForm& a, const IsometryForm& b);

}  // namespace uin

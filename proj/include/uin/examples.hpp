#pragma once

#include "uin/opmodel.hpp"
#include "uin/vecnorm.hpp"

namespace uin::examples {

// Worked example (1): the gauge max{5 s1 / 2, s1 + s2 + s3} with the
// operators A = (2/5) I_2 (+) (1/5) I and the split A = B + D,
// B = (2/5) diag(1,0) (+) (1/10) I, D = (2/5) diag(0,1) (+) (1/10) I.
// A is an extreme point of the unit ball and || mu B + nu D || =
// max{|mu|, |nu|} for all real mu, nu.
SymmetricNorm example1_norm();
TailOperator example1_a();
TailOperator example1_b();
TailOperator example1_d();

// Worked example (2): the Ky Fan 2-norm with A = diag(1, 0, ...),
// B = diag(1/2, 1/2, 0, ...), D = diag(1/2, -1/2, 0, ...);
// || mu B + nu D ||_2 = (|mu+nu| + |mu-nu|)/2 = max{|mu|, |nu|}.
SymmetricNorm example2_norm();
TailOperator example2_a();
TailOperator example2_b();
TailOperator example2_d();

// max over the 21 x 21 grid mu, nu in [-2, 2] (step 0.2) of
// | ||mu B + nu D||_f - max{|mu|, |nu|} |
double flatness_grid_deviation(const TailOperator& b, const TailOperator& d,
                               const SymmetricNorm& f);

}  // namespace uin::examples

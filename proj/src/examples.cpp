#include "uin/examples.hpp"

#include <algorithm>
#include <cmath>

#include "uin/uinorm.hpp"

namespace uin::examples {

SymmetricNorm example1_norm() {
    return SymmetricNorm::max_c(CSet({{2.5, 0.0, 0.0}, {1.0, 1.0, 1.0}}));
}

TailOperator example1_a() {
    return TailOperator(Matrix::from_rows({{0.4, 0.0}, {0.0, 0.4}}), 0.2);
}

TailOperator example1_b() {
    return TailOperator(Matrix::from_rows({{0.4, 0.0}, {0.0, 0.0}}), 0.1);
}

TailOperator example1_d() {
    return TailOperator(Matrix::from_rows({{0.0, 0.0}, {0.0, 0.4}}), 0.1);
}

SymmetricNorm example2_norm() { return SymmetricNorm::ky_fan(2, 2); }

TailOperator example2_a() { return TailOperator(Matrix::from_rows({{1.0}}), 0.0); }

TailOperator example2_b() {
    return TailOperator(Matrix::from_rows({{0.5, 0.0}, {0.0, 0.5}}), 0.0);
}

TailOperator example2_d() {
    return TailOperator(Matrix::from_rows({{0.5, 0.0}, {0.0, -0.5}}), 0.0);
}

double flatness_grid_deviation(const TailOperator& b, const TailOperator& d,
                               const SymmetricNorm& f) {
    double worst = 0.0;
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const double mu = -2.0 + 0.2 * i;
            const double nu = -2.0 + 0.2 * j;
            const double nrm = norm_f(mu * b + nu * d, f);
            worst = std::max(worst, std::abs(nrm - std::max(std::abs(mu), std::abs(nu))));
        }
    }
    return worst;
}

}  // namespace uin::examples

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "uin/matrix.hpp"

namespace uin {

// Seeded random source. Doubles are derived from raw mt19937_64 output
// (never from std::*_distribution, whose streams are implementation
// defined), so a report generated from a given seed is reproducible
// bit-for-bit.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(bits() % n); }

    double uniform() {  // [0, 1)
        return static_cast<double>(bits() >> 11) * (1.0 / 9007199254740992.0);
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian();
    cdouble gaussian_complex() { return {gaussian(), gaussian()}; }
    cdouble unimodular();  // random point on the unit circle

    std::vector<cdouble> unit_vector(std::size_t n);
    Matrix gaussian_matrix(std::size_t rows, std::size_t cols, double scale = 1.0);
    Matrix hermitian_matrix(std::size_t n, double scale = 1.0);
    Matrix psd_matrix(std::size_t n, double scale = 1.0);

    // Haar-distributed unitary via Gram-Schmidt of a Ginibre matrix with
    // phase-fixed diagonal.
    Matrix unitary(std::size_t n);
    // first n columns of a random unitary of size dim
    Matrix frame(std::size_t dim, std::size_t n);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace uin

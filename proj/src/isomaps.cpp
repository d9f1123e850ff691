#include "uin/isomaps.hpp"

#include <cmath>
#include <stdexcept>

#include "uin/rng.hpp"
#include "uin/uinorm.hpp"

namespace uin {

const char* to_string(Phi phi) {
    switch (phi) {
        case Phi::Id: return "id";
        case Phi::Transpose: return "t";
        case Phi::Adjoint: return "adj";
        case Phi::AdjointTranspose: return "adjt";
    }
    return "?";
}

TailOperator apply_phi(Phi phi, const TailOperator& a) {
    switch (phi) {
        case Phi::Id: return a;
        case Phi::Transpose: return a.transpose();
        case Phi::Adjoint: return a.adjoint();
        case Phi::AdjointTranspose:
            // (A^*)^t is the entrywise conjugate
            return TailOperator(a.block().conjugate(), std::conj(a.tail()));
    }
    throw std::logic_error("unreachable");
}

namespace {

bool is_unitary(const TailOperator& u, double tol) {
    if (std::abs(std::abs(u.tail()) - 1.0) > tol) return false;
    const std::size_t m = u.block_size();
    if (m == 0) return true;
    const Matrix id = Matrix::identity(m);
    return max_abs_diff(u.block().adjoint() * u.block(), id) <= tol &&
           max_abs_diff(u.block() * u.block().adjoint(), id) <= tol;
}

}  // namespace

IsometryForm::IsometryForm(TailOperator u, TailOperator v, Phi phi, TailOperator r0, double tol)
    : u_(std::move(u)), v_(std::move(v)), phi_(phi), r0_(std::move(r0)) {
    if (!is_unitary(u_, tol) || !is_unitary(v_, tol))
        throw std::invalid_argument("IsometryForm: U and V must be unitary");
}

TailOperator apply(const IsometryForm& map, const TailOperator& a) {
    return map.u().adjoint() * apply_phi(map.phi(), a) * map.v() + map.r0();
}

Certificate verify_distance_preserving(const IsometryForm& map, const SymmetricNorm& f,
                                       std::size_t pairs, Rng& rng, double tol) {
    const std::size_t m = std::max<std::size_t>(map.u().block_size(), 2);
    double worst = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        const TailOperator a(rng.gaussian_matrix(m, m, 0.6), 0.4 * rng.gaussian_complex());
        const TailOperator b(rng.gaussian_matrix(m, m, 0.6), 0.4 * rng.gaussian_complex());
        const double lhs = norm_f(a - b, f);
        const double rhs = norm_f(apply(map, a) - apply(map, b), f);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    Certificate c = check_le(std::string("distance-preserving/") + to_string(map.phi()) + "/" +
                                 f.describe(),
                             worst, 0.0, tol, 1e-15);
    c.witness = {{"pairs", pairs}};
    return c;
}

double phase_quotient_distance(const IsometryForm& a, const IsometryForm& b) {
    const std::size_t m = std::max(a.u().block_size(), b.u().block_size());
    const Matrix u1 = a.u().padded_to(m).block();
    const Matrix v1 = a.v().padded_to(m).block();
    const Matrix u2 = b.u().padded_to(m).block();
    const Matrix v2 = b.v().padded_to(m).block();

    cdouble overlap = (u2.adjoint() * u1).trace() + (v2.adjoint() * v1).trace();
    const double mag = std::abs(overlap);
    const cdouble phase = mag > 1e-14 ? std::conj(overlap) / mag : cdouble(1.0, 0.0);

    const double du = (phase * u1 - u2).frobenius_norm();
    const double dv = (phase * v1 - v2).frobenius_norm();
    return std::sqrt(du * du + dv * dv);
}

RecoverResult recover(const std::function<TailOperator(const TailOperator&)>& oracle,
                      std::size_t m, const SymmetricNorm& f) {
    RecoverResult out;
    if (m == 0) {
        out.message = "block size must be positive";
        return out;
    }

    const TailOperator r0 = oracle(TailOperator(Matrix(m, m), 0.0));
    auto lhat = [&](const TailOperator& x) { return oracle(x) - r0; };

    auto unit = [&](std::size_t i, std::size_t j) {
        Matrix e(m, m);
        e(i, j) = 1.0;
        return TailOperator(std::move(e), 0.0);
    };

    const TailOperator m11 = lhat(unit(0, 0));
    const TailOperator m11i = lhat(cdouble(0.0, 1.0) * unit(0, 0));
    const bool linear = distance_max_abs(m11i, cdouble(0.0, 1.0) * m11) <= 1e-8;
    const bool antilinear = distance_max_abs(m11i, cdouble(0.0, -1.0) * m11) <= 1e-8;
    if (linear == antilinear) {
        out.message = "oracle is neither complex-linear nor antilinear on probes";
        return out;
    }

    bool transpose_pattern = false;
    if (m >= 2) {
        const TailOperator m12 = lhat(unit(0, 1));
        const std::size_t mm = std::max(m11.block_size(), m12.block_size());
        const Matrix z = m11.padded_to(mm).block() * m12.padded_to(mm).block().adjoint();
        transpose_pattern = z.frobenius_norm() > 0.5;
    }
    const Phi phi = linear ? (transpose_pattern ? Phi::Transpose : Phi::Id)
                           : (transpose_pattern ? Phi::Adjoint : Phi::AdjointTranspose);

    // images of the matrix units are rank one: a_r b_s^H with a = U^* e,
    // b = V^* e (indices swapped for the transpose pattern)
    const std::size_t mb = m11.block_size();
    if (mb != m) {
        out.message = "oracle image block does not match the promised size";
        return out;
    }
    const SvdResult dec = svd_finite(m11.block());
    if (dec.values.empty() || std::abs(dec.values[0] - 1.0) > 1e-6 ||
        (dec.values.size() > 1 && dec.values[1] > 1e-6)) {
        out.message = "probe image is not a unit rank-one operator";
        return out;
    }
    const std::vector<cdouble> a1 = dec.U.column(0);
    const std::vector<cdouble> b1 = dec.V.column(0);

    Matrix ustar(mb, mb), vstar(mb, mb);
    for (std::size_t r = 0; r < m; ++r) {
        // a_r  from  M(r,0) b_1   (or M(0,r) b_1 under the transpose pattern)
        const Matrix img_a =
            (transpose_pattern ? lhat(unit(0, r)) : lhat(unit(r, 0))).padded_to(mb).block();
        std::vector<cdouble> ar(mb, 0.0);
        for (std::size_t i = 0; i < mb; ++i)
            for (std::size_t j = 0; j < mb; ++j) ar[i] += img_a(i, j) * b1[j];
        ustar.set_column(r, ar);

        const Matrix img_b =
            (transpose_pattern ? lhat(unit(r, 0)) : lhat(unit(0, r))).padded_to(mb).block();
        std::vector<cdouble> br(mb, 0.0);
        for (std::size_t i = 0; i < mb; ++i)
            for (std::size_t j = 0; j < mb; ++j) br[i] += std::conj(img_b(j, i)) * a1[j];
        vstar.set_column(r, br);
    }

    // tail multiplier from the pure-tail probe
    const cdouble t0 = lhat(TailOperator(Matrix(m, m), 1.0)).tail();
    if (std::abs(std::abs(t0) - 1.0) > 1e-6) {
        out.message = "tail response is not unimodular";
        return out;
    }

    Matrix u = ustar.adjoint();
    Matrix v = vstar.adjoint();
    // joint phase fix: first nonzero entry of U's first column real positive
    for (std::size_t i = 0; i < m; ++i) {
        const cdouble e = u(i, 0);
        if (std::abs(e) > 1e-8) {
            const cdouble phase = std::conj(e) / std::abs(e);
            u *= phase;
            v *= phase;
            break;
        }
    }

    TailOperator uop(std::move(u), 1.0);
    TailOperator vop(std::move(v), t0);
    if (!is_unitary(uop, 1e-6) || !is_unitary(vop, 1e-6)) {
        out.message = "recovered frames are not unitary";
        return out;
    }

    IsometryForm form(std::move(uop), std::move(vop), phi, r0, 1e-6);

    // validation on fresh inputs: exact agreement and distance preservation
    Rng rng(0xfeedface1234ULL);
    double worst = 0.0;
    TailOperator prev(rng.gaussian_matrix(m, m, 0.7), 0.5 * rng.gaussian_complex());
    for (int i = 0; i < 50; ++i) {
        const TailOperator x(rng.gaussian_matrix(m, m, 0.7), 0.5 * rng.gaussian_complex());
        worst = std::max(worst, spectral_norm(apply(form, x) - oracle(x)));
        worst = std::max(worst,
                         std::abs(norm_f(x - prev, f) - norm_f(oracle(x) - oracle(prev), f)));
        prev = x;
    }
    out.residual = worst;
    if (worst > 1e-6) {
        out.message = "oracle deviates from the canonical form on validation inputs";
        return out;
    }
    out.ok = true;
    out.form = std::move(form);
    return out;
}

}  // namespace uin

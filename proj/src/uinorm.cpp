#include "uin/uinorm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uin/rng.hpp"

namespace uin {

namespace {

TailOperator rank_one(std::span<const cdouble> x, std::span<const cdouble> y) {
    return TailOperator(Matrix::outer(x, y), 0.0);
}

}  // namespace

double norm_f(const TailOperator& a, const SymmetricNorm& f) {
    return f.eval(singular_values(a, f.arity()).values);
}

double norm_c(const TailOperator& a, std::span<const double> c) {
    return cnorm_of_spectrum(c, singular_values(a, c.size()).values);
}

RadiusConstants radius_constants(const SymmetricNorm& f) {
    const std::size_t n = f.arity();
    RadiusConstants rc;
    rc.alpha = f.at_e1();
    if (n == 1) {
        rc.beta = 2.0 * rc.alpha;
        return rc;
    }
    std::vector<double> v(n, 0.0);
    const std::size_t k = n / 2;
    for (std::size_t i = 0; i < k; ++i) v[i] = 1.0;
    if (n % 2 == 1) v[k] = 0.5;
    rc.beta = 2.0 * f.eval(v);
    return rc;
}

Certificate verify_radius_sandwich(const TailOperator& a, const SymmetricNorm& f, double tol) {
    const RadiusConstants rc = radius_constants(f);
    const double r = numerical_radius(a);
    const double nf = norm_f(a, f);
    const double lower_gap = nf - rc.alpha * r;   // >= 0 expected
    const double upper_gap = rc.beta * r - nf;    // >= 0 expected

    Certificate c;
    c.statement = "radius-sandwich/" + f.describe();
    c.lhs = rc.alpha * r;
    c.rhs = rc.beta * r;
    c.tol = tol;
    c.witness = {{"norm", nf},
                 {"radius", r},
                 {"alpha", rc.alpha},
                 {"beta", rc.beta},
                 {"equality_at_alpha", std::abs(lower_gap) <= tol},
                 {"equality_at_beta", std::abs(upper_gap) <= tol}};
    if (lower_gap >= -tol && upper_gap >= -tol)
        c.verdict = (std::abs(lower_gap) <= tol || std::abs(upper_gap) <= tol)
                        ? Verdict::Equality
                        : Verdict::Holds;
    else
        c.verdict = Verdict::Violated;
    return c;
}

std::pair<TailOperator, TailOperator> radius_witnesses(const SymmetricNorm& f) {
    const std::size_t n = f.arity();
    // alpha witness: the rank-one projection xx*
    const TailOperator alpha_w(Matrix::from_rows({{1.0}}), 0.0);

    // beta witness: k two-by-two shift blocks scaled by 2, plus a trailing
    // one-dimensional projection when n is odd
    const std::size_t k = n / 2;
    if (n == 1) {
        Matrix f2(2, 2);
        f2(0, 1) = 2.0;
        return {alpha_w, TailOperator(std::move(f2), 0.0)};
    }
    const std::size_t m = (n % 2 == 0) ? 2 * k : 2 * k + 1;
    Matrix b(m, m);
    for (std::size_t j = 0; j < k; ++j) b(2 * j, 2 * j + 1) = 2.0;
    if (n % 2 == 1) b(m - 1, m - 1) = 1.0;
    return {alpha_w, TailOperator(std::move(b), 0.0)};
}

Certificate is_uniform_cert(const SymmetricNorm& f, const TailOperator& a, const TailOperator& b,
                            double tol) {
    const double nab = norm_f(a * b, f);
    const double bound_a = spectral_norm(a) * norm_f(b, f);
    const double bound_b = spectral_norm(b) * norm_f(a, f);
    return check_le("uniform/" + f.describe(), nab, std::min(bound_a, bound_b), tol, 1e-12,
                    {{"s1A_normB", bound_a}, {"s1B_normA", bound_b}});
}

bool is_cross_norm(const SymmetricNorm& f) { return std::abs(f.at_e1() - 1.0) <= 1e-12; }

bool is_submultiplicative(const SymmetricNorm& f) { return f.at_e1() >= 1.0 - 1e-12; }

bool is_algebra_norm(const SymmetricNorm& f) {
    if (std::abs(f.at_e1() - 1.0) > 1e-10) return false;
    const std::size_t n = f.arity();
    // fixed deterministic grid of canonicalized sample vectors
    Rng rng(0x5eedadd5ULL);
    for (int i = 0; i < 200; ++i) {
        std::vector<double> x(n);
        for (auto& v : x) v = rng.uniform();
        if (i == 0) std::fill(x.begin(), x.end(), 1.0);
        const std::vector<double> s = canonicalized(x);
        if (std::abs(f.eval(s) - s[0]) > 1e-10) return false;
    }
    return true;
}

TailOperator triple_product(const TailOperator& a, const TailOperator& b, const TailOperator& c) {
    const TailOperator bs = b.adjoint();
    return 0.5 * (a * bs * c + c * bs * a);
}

Certificate triple_submult_cert(const SymmetricNorm& f, const TailOperator& a,
                                const TailOperator& b, const TailOperator& c, double tol) {
    const double lhs = norm_f(triple_product(a, b, c), f);
    const double rhs = norm_f(a, f) * norm_f(b, f) * norm_f(c, f);
    return check_le("triple-product/" + f.describe(), lhs, rhs, tol, 1e-12,
                    {{"f_e1", f.at_e1()}});
}

bool rank_one_extremal_check(const SymmetricNorm& f, std::size_t samples, Rng& rng) {
    const std::size_t n = f.arity();
    for (std::size_t i = 0; i < samples; ++i) {
        // rank >= 2 with well separated singular values
        std::vector<double> d(std::max<std::size_t>(2, n), 0.0);
        d[0] = 1.0;
        d[1] = 0.3 + 0.6 * rng.uniform();
        const std::size_t m = d.size();
        const TailOperator t(rng.unitary(m) * Matrix::diag(std::span<const double>(d)) *
                                 rng.unitary(m),
                             0.0);
        const double nf = norm_f(t, f);
        const double s1 = spectral_norm(t);
        if (nf <= s1 + 1e-10) return false;  // norm touches s_1 off rank one
    }
    return true;
}

Certificate product_equality_cert(const SymmetricNorm& f, const TailOperator& a,
                                  const TailOperator& b, Rng& rng, ProductEqualityOptions opts,
                                  double tol) {
    if (!is_submultiplicative(f))
        throw std::invalid_argument("product_equality_cert: f is not submultiplicative");
    const double na = norm_f(a, f);
    const double nb = norm_f(b, f);
    if (na <= 1e-14 || nb <= 1e-14)
        throw std::invalid_argument("product_equality_cert: zero operand");

    const TailOperator ab = a * b;
    const double nab = norm_f(ab, f);
    const double s1ab = spectral_norm(ab);

    Certificate c = check_eq("product-equality/" + f.describe(), nab, na * nb, tol);
    if (c.verdict == Verdict::Violated && nab <= na * nb + tol) c.verdict = Verdict::Holds;
    c.witness["s1_AB"] = s1ab;
    c.witness["norm_A"] = na;
    c.witness["norm_B"] = nb;

    if (is_cross_norm(f)) {
        // equality iff s_1(AB) = ||A|| ||B||
        const bool eq = c.verdict == Verdict::Equality;
        const bool crit = std::abs(s1ab - na * nb) <= tol;
        c.witness["s1_criterion"] = crit;
        c.witness["s1_criterion_agrees"] = (eq == crit);
        if (eq != crit) c.verdict = Verdict::Violated;

        if (opts.rank_one_extremal) {
            const bool flag_ok = rank_one_extremal_check(f, opts.flag_samples, rng);
            c.witness["rank_one_extremal_verified"] = flag_ok;
            if (flag_ok && eq) {
                // expect A = xy*, B = yz* with matching middle vector
                const std::size_t m = std::max(a.block_size(), b.block_size());
                const SvdResult da = svd_finite(a.padded_to(m).block());
                const SvdResult db = svd_finite(b.padded_to(m).block());
                const bool rank_one = da.values.size() >= 2 && db.values.size() >= 2 &&
                                      da.values[1] <= tol && db.values[1] <= tol &&
                                      std::abs(a.tail()) <= tol && std::abs(b.tail()) <= tol;
                double middle_align = 0.0;
                if (rank_one) {
                    cdouble dot = 0.0;
                    for (std::size_t i = 0; i < m; ++i)
                        dot += std::conj(da.V(i, 0)) * db.U(i, 0);
                    middle_align = std::abs(dot);
                }
                c.witness["rank_one_form"] = rank_one && std::abs(middle_align - 1.0) <= 1e-6;
                c.witness["middle_alignment"] = middle_align;
                if (!(rank_one && std::abs(middle_align - 1.0) <= 1e-6))
                    c.verdict = Verdict::Violated;
            }
        }
    }
    return c;
}

std::vector<Certificate> cnorm_corollary_suite(std::span<const double> c, Rng& rng,
                                               std::size_t samples) {
    const std::vector<double> cv(c.begin(), c.end());
    const SymmetricNorm f = SymmetricNorm::c_norm(cv);  // validates shape
    const std::size_t n = cv.size();
    const double c1 = cv[0];
    std::vector<Certificate> out;

    auto id = [&](const char* part) { return "cnorm-corollary/" + f.describe() + "/" + part; };

    // (a) submultiplicative iff c1 >= 1
    {
        double worst_gap = -1e300;  // max ||AB|| - ||A|| ||B||
        nlohmann::json w;
        if (c1 >= 1.0) {
            for (std::size_t i = 0; i < samples; ++i) {
                const TailOperator a(rng.gaussian_matrix(n, n, 0.5), 0.3 * rng.gaussian_complex());
                const TailOperator b(rng.gaussian_matrix(n, n, 0.5), 0.3 * rng.gaussian_complex());
                worst_gap = std::max(worst_gap, norm_f(a * b, f) - norm_f(a, f) * norm_f(b, f));
            }
            w["predicted"] = "submultiplicative";
            out.push_back(check_le(id("a-submult"), worst_gap, 0.0, 1e-9, 1e-12, w));
        } else {
            // rank-one counterexample A = B = xx*
            const auto x = rng.unit_vector(n);
            const TailOperator a = rank_one(x, x);
            const double lhs = norm_f(a * a, f);
            const double rhs = norm_f(a, f) * norm_f(a, f);
            w["predicted"] = "not submultiplicative";
            w["counterexample_lhs"] = lhs;
            w["counterexample_rhs"] = rhs;
            out.push_back(check_le(id("a-counterexample-found"), rhs + 1e-9, lhs, 0.0, 1e-12, w));
        }
    }

    // (b) cross norm iff c1 = 1
    out.push_back(check_eq(id("b-cross"), is_cross_norm(f) ? 1.0 : 0.0,
                           std::abs(c1 - 1.0) <= 1e-12 ? 1.0 : 0.0, 0.0,
                           {{"f_e1", f.at_e1()}}));

    // (c) for c1 >= 1: an equality pair exists iff c1 = 1
    if (c1 >= 1.0 - 1e-12) {
        if (std::abs(c1 - 1.0) <= 1e-12) {
            const auto x = rng.unit_vector(n);
            const TailOperator a = rank_one(x, x);
            out.push_back(check_eq(id("c-equality-pair"), norm_f(a * a, f),
                                   norm_f(a, f) * norm_f(a, f), 1e-9,
                                   {{"witness", "A = B = xx*"}}));
        } else {
            double min_gap = 1e300;  // ||A|| ||B|| - ||AB||, expected strictly positive
            for (std::size_t i = 0; i < samples; ++i) {
                const TailOperator a(rng.gaussian_matrix(n, n, 0.5), 0.3 * rng.gaussian_complex());
                const TailOperator b(rng.gaussian_matrix(n, n, 0.5), 0.3 * rng.gaussian_complex());
                min_gap = std::min(min_gap, norm_f(a, f) * norm_f(b, f) - norm_f(a * b, f));
            }
            out.push_back(check_le(id("c-strict"), 1e-9, min_gap, 0.0, 1e-12,
                                   {{"min_gap", min_gap}}));
        }
    }

    // (d) spectral case: equality iff s_1(AB) = s_1(A) s_1(B)
    if (n >= 2 && std::abs(c1 - 1.0) <= 1e-12 && cv[1] == 0.0) {
        const TailOperator i1 = TailOperator::identity();
        const double nab = norm_f(i1 * i1, f);
        out.push_back(check_eq(id("d-spectral-unitary"), nab, 1.0, 1e-12,
                               {{"witness", "A = B = I, equality without rank-one form"}}));
    }

    // (e) c1 = 1, c2 > 0: equality iff A = xy*, B = yz*
    if (n >= 2 && std::abs(c1 - 1.0) <= 1e-12 && cv[1] > 0.0) {
        const auto x = rng.unit_vector(n);
        const auto y = rng.unit_vector(n);
        const auto z = rng.unit_vector(n);
        const TailOperator a = rank_one(x, y);
        const TailOperator b = rank_one(y, z);
        out.push_back(check_eq(id("e-rank-one-equality"), norm_f(a * b, f),
                               norm_f(a, f) * norm_f(b, f), 1e-9,
                               {{"witness", "A = xy*, B = yz*"}}));

        double min_gap = 1e300;
        for (std::size_t i = 0; i < samples; ++i) {
            // genuinely rank-two operands stay strictly below the product bound
            std::vector<double> d1{1.0, 0.4 + 0.5 * rng.uniform()};
            std::vector<double> d2{1.0, 0.4 + 0.5 * rng.uniform()};
            d1.resize(n, 0.0);
            d2.resize(n, 0.0);
            const TailOperator a2(rng.unitary(n) * Matrix::diag(std::span<const double>(d1)) *
                                      rng.unitary(n),
                                  0.0);
            const TailOperator b2(rng.unitary(n) * Matrix::diag(std::span<const double>(d2)) *
                                      rng.unitary(n),
                                  0.0);
            min_gap = std::min(min_gap,
                               norm_f(a2, f) * norm_f(b2, f) - norm_f(a2 * b2, f));
        }
        out.push_back(check_le(id("e-rank-two-strict"), 1e-9, min_gap, 0.0, 1e-12,
                               {{"min_gap", min_gap}}));
    }

    return out;
}

}  // namespace uin

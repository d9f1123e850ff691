#include "uin/vecnorm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uin {

namespace {

void require_weight_vector(std::span<const double> c) {
    if (c.empty()) throw std::invalid_argument("weight vector is empty");
    double total = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (!(c[i] >= 0.0)) throw std::invalid_argument("weight vector has a negative entry");
        if (i + 1 < c.size() && c[i] + 1e-12 < c[i + 1])
            throw std::invalid_argument("weight vector is not sorted descending");
        total += c[i];
    }
    if (total == 0.0) throw std::invalid_argument("weight vector is identically zero");
}

double lp_of_canonical(std::span<const double> x, double p) {
    if (x.empty()) return 0.0;
    const double top = x[0];
    if (top == 0.0) return 0.0;
    if (std::isinf(p)) return top;
    if (p == 1.0) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    double s = 0.0;
    for (double v : x) s += std::pow(v / top, p);
    return top * std::pow(s, 1.0 / p);
}

}  // namespace

CSet::CSet(std::vector<std::vector<double>> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty()) throw std::invalid_argument("generating set is empty");
    const std::size_t n = vectors_.front().size();
    for (const auto& c : vectors_) {
        if (c.size() != n) throw std::invalid_argument("generating set has mixed arities");
        require_weight_vector(c);
    }
    // prune exact duplicates only; dominated members change nothing for a max
    std::vector<std::vector<double>> unique;
    for (const auto& c : vectors_)
        if (std::find(unique.begin(), unique.end(), c) == unique.end()) unique.push_back(c);
    vectors_ = std::move(unique);
}

SymmetricNorm SymmetricNorm::lp(std::size_t n, double p) {
    if (n == 0) throw std::invalid_argument("arity must be positive");
    if (!(p >= 1.0)) throw std::invalid_argument("lp norm needs p >= 1");
    SymmetricNorm f;
    f.family_ = Family::Lp;
    f.n_ = n;
    f.p_ = p;
    return f;
}

SymmetricNorm SymmetricNorm::ky_fan(std::size_t n, std::size_t k) {
    if (n == 0) throw std::invalid_argument("arity must be positive");
    if (k == 0 || k > n) throw std::invalid_argument("ky_fan needs 1 <= k <= n");
    SymmetricNorm f;
    f.family_ = Family::KyFan;
    f.n_ = n;
    f.k_ = k;
    return f;
}

SymmetricNorm SymmetricNorm::c_norm(std::vector<double> c) {
    require_weight_vector(c);
    SymmetricNorm f;
    f.family_ = Family::CNorm;
    f.n_ = c.size();
    f.c_ = std::move(c);
    return f;
}

SymmetricNorm SymmetricNorm::cp_norm(std::vector<double> c, double p) {
    require_weight_vector(c);
    if (!(p >= 1.0)) throw std::invalid_argument("cp norm needs p >= 1");
    SymmetricNorm f;
    f.family_ = Family::CPNorm;
    f.n_ = c.size();
    f.c_ = std::move(c);
    f.p_ = p;
    return f;
}

SymmetricNorm SymmetricNorm::max_c(CSet s) {
    SymmetricNorm f;
    f.family_ = Family::MaxC;
    f.n_ = s.arity();
    f.cset_.push_back(std::move(s));
    return f;
}

SymmetricNorm SymmetricNorm::scaled_linf(std::size_t n, double gamma) {
    if (n == 0) throw std::invalid_argument("arity must be positive");
    if (!(gamma > 0.0)) throw std::invalid_argument("scaled_linf needs gamma > 0");
    SymmetricNorm f;
    f.family_ = Family::ScaledLInf;
    f.n_ = n;
    f.gamma_ = gamma;
    return f;
}

const CSet& SymmetricNorm::cset() const {
    if (cset_.empty()) throw std::logic_error("norm has no generating set");
    return cset_.front();
}

double SymmetricNorm::eval(std::span<const double> x) const {
    if (x.size() != n_) throw std::invalid_argument("eval: arity mismatch");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("eval: NaN/Inf entry");

    const std::vector<double> s = canonicalized(x);
    switch (family_) {
        case Family::Lp:
            return lp_of_canonical(s, p_);
        case Family::KyFan: {
            double sum = 0.0;
            for (std::size_t i = 0; i < k_; ++i) sum += s[i];
            return sum;
        }
        case Family::CNorm:
            return cnorm_of_spectrum(c_, s);
        case Family::CPNorm: {
            std::vector<double> w(n_);
            for (std::size_t i = 0; i < n_; ++i) w[i] = c_[i] * s[i];
            return lp_of_canonical(w, p_);
        }
        case Family::MaxC: {
            double best = 0.0;
            for (const auto& c : cset().vectors())
                best = std::max(best, cnorm_of_spectrum(c, s));
            return best;
        }
        case Family::ScaledLInf:
            return gamma_ * s[0];
    }
    throw std::logic_error("unreachable");
}

double SymmetricNorm::at_e1() const {
    std::vector<double> e1(n_, 0.0);
    e1[0] = 1.0;
    return eval(e1);
}

double SymmetricNorm::at_ones() const {
    const std::vector<double> ones(n_, 1.0);
    return eval(ones);
}

std::string SymmetricNorm::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Lp:
            if (std::isinf(p_))
                os << "lp(p=inf,n=" << n_ << ")";
            else
                os << "lp(p=" << p_ << ",n=" << n_ << ")";
            break;
        case Family::KyFan:
            os << "kyfan(k=" << k_ << ",n=" << n_ << ")";
            break;
        case Family::CNorm:
        case Family::CPNorm:
            os << (family_ == Family::CNorm ? "cnorm(c=[" : "cpnorm(c=[");
            for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
            os << "]";
            if (family_ == Family::CPNorm) os << ",p=" << p_;
            os << ")";
            break;
        case Family::MaxC:
            os << "maxc(|S|=" << cset().vectors().size() << ",n=" << n_ << ")";
            break;
        case Family::ScaledLInf:
            os << "scaled_linf(gamma=" << gamma_ << ",n=" << n_ << ")";
            break;
    }
    return os.str();
}

std::vector<double> canonicalized(std::span<const double> x) {
    std::vector<double> s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = std::abs(x[i]);
    std::stable_sort(s.begin(), s.end(), std::greater<>());
    return s;
}

bool weak_majorizes(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("weak_majorizes: arity mismatch");
    for (double v : x)
        if (v < 0.0) throw std::invalid_argument("weak_majorizes: negative entry");
    for (double v : y)
        if (v < 0.0) throw std::invalid_argument("weak_majorizes: negative entry");

    const std::vector<double> xs = canonicalized(x);
    const std::vector<double> ys = canonicalized(y);
    double sx = 0.0, sy = 0.0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
        sx += xs[k];
        sy += ys[k];
        if (sx > sy) return false;
    }
    return true;
}

double cnorm_of_spectrum(std::span<const double> c, std::span<const double> s) {
    if (c.size() != s.size()) throw std::invalid_argument("cnorm_of_spectrum: arity mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0.0 || s[i] < -1e-12)
            throw std::invalid_argument("cnorm_of_spectrum: negative entry");
        if (i + 1 < c.size() && (c[i] + 1e-12 < c[i + 1] || s[i] + 1e-12 < s[i + 1]))
            throw std::invalid_argument("cnorm_of_spectrum: input not sorted descending");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * std::max(s[i], 0.0);
    return acc;
}

bool fan_dominance_check(const SymmetricNorm& f, std::span<const double> x,
                         std::span<const double> y, FanReport* report, double tol) {
    FanReport r;
    r.antecedent = weak_majorizes(x, y);
    r.fx = f.eval(x);
    r.fy = f.eval(y);
    if (report) *report = r;
    return !r.antecedent || r.fx <= r.fy + tol;
}

}  // namespace uin

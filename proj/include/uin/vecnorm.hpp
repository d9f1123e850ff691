#pragma once

#include <span>
#include <string>
#include <vector>

namespace uin {

// Finite generating set for a max-of-c-norms gauge: each member is a
// descending nonnegative weight vector, not all zero. Exact duplicates are
// pruned at construction; dominated members are kept as-is.
class CSet {
public:
    explicit CSet(std::vector<std::vector<double>> vectors);

    const std::vector<std::vector<double>>& vectors() const { return vectors_; }
    std::size_t arity() const { return vectors_.front().size(); }

private:
    std::vector<std::vector<double>> vectors_;
};

// A symmetric gauge function f on R^n, i.e. a norm invariant under entry
// permutations and sign flips. Evaluation always canonicalizes the argument
// (absolute values, descending sort) first, so the symmetry is structural
// rather than numerical.
//
// Families:
//   lp(p)            (sum |x_j|^p)^(1/p), p >= 1, p = inf allowed
//   ky_fan(k)        sum of the k largest |x_j|
//   c_norm(c)        sum c_j * x_[j]        (c descending, nonnegative)
//   cp_norm(c, p)    (sum (c_j x_[j])^p)^(1/p)
//   max_c(S)         max over c in S of the c-norm
//   scaled_linf(g)   g * max |x_j|, g > 0   (realizes f(e1) != 1)
class SymmetricNorm {
public:
    enum class Family { Lp, KyFan, CNorm, CPNorm, MaxC, ScaledLInf };

    static SymmetricNorm lp(std::size_t n, double p);
    static SymmetricNorm ky_fan(std::size_t n, std::size_t k);
    static SymmetricNorm c_norm(std::vector<double> c);
    static SymmetricNorm cp_norm(std::vector<double> c, double p);
    static SymmetricNorm max_c(CSet s);
    static SymmetricNorm scaled_linf(std::size_t n, double gamma);

    std::size_t arity() const { return n_; }
    Family family() const { return family_; }

    double eval(std::span<const double> x) const;
    double operator()(std::span<const double> x) const { return eval(x); }

    double at_e1() const;    // f(e_1)
    double at_ones() const;  // f(1, ..., 1)

    // family parameters (valid per family; see accumulated fields)
    double p() const { return p_; }
    std::size_t k() const { return k_; }
    const std::vector<double>& c() const { return c_; }
    const CSet& cset() const;
    double gamma() const { return gamma_; }

    std::string describe() const;

private:
    SymmetricNorm() = default;

    Family family_ = Family::Lp;
    std::size_t n_ = 0;
    double p_ = 2.0;
    std::size_t k_ = 1;
    std::vector<double> c_;
    std::vector<CSet> cset_;  // empty or one element
    double gamma_ = 1.0;
};

// |x| sorted descending
std::vector<double> canonicalized(std::span<const double> x);

// x weakly majorized by y: every partial sum of the descending rearrangement
// of x is dominated by that of y. Entries must be nonnegative.
bool weak_majorizes(std::span<const double> x, std::span<const double> y);

// sum c_j s_j for descending nonnegative c and s
double cnorm_of_spectrum(std::span<const double> c, std::span<const double> s);

struct FanReport {
    bool antecedent = false;  // x weakly majorized by y
    double fx = 0.0;
    double fy = 0.0;
};

// (x majorized by y)  =>  f(x) <= f(y), with a small numerical slack.
// Property oracle; fills *report with the evaluated sides when given.
bool fan_dominance_check(const SymmetricNorm& f, std::span<const double> x,
                         std::span<const double> y, FanReport* report = nullptr,
                         double tol = 1e-10);

}  // namespace uin

// The u-tilde solver, the series toolkit over Z^r tensor Z[[s]][s^-1]
// (s-numbers, operators K and D, inner product), epsilon and gamma by two
// independent routes, the twisted multiplications, and t-commutation
// detection.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "krqt/tableaux.hpp"
#include "krqt/ylattice.hpp"

namespace krqt {

class InsufficientWindow : public std::runtime_error {
  public:
    explicit InsufficientWindow(const std::string& what) : std::runtime_error(what) {}
};

// Solution of u_{i,j} = u~_{i,j-1} + u~_{i,j+1} - u~_{i-1,j} - u~_{i+1,j}
// with u~ = 0 for j sufficiently small, tabulated for j <= ceiling.
// u~ may have infinite support, so the ceiling is part of the contract.
class UTildeTable {
  public:
    UTildeTable(int rank, int ceiling) : rank_(rank), ceiling_(ceiling) {}

    int rank() const { return rank_; }
    int ceiling() const { return ceiling_; }

    int at(int node, int spectral) const;
    void set(int node, int spectral, int value);
    const std::map<YVar, int>& nonzero() const { return vals_; }

  private:
    int rank_;
    int ceiling_;
    std::map<YVar, int> vals_;
};

UTildeTable tilde_u(const YMonomial& m, int rank, int ceiling);

// [k]_s = s^{k-1} + s^{k-3} + ... + s^{-k+1}; [0]_s = 0.
IntLaurent s_number(int k);

// Element of Z^r tensor F on an explicit window [lo,hi].  Coefficients
// outside the window are exactly zero when the corresponding flag is set and
// unknown otherwise; arithmetic never silently reads unknown coefficients.
class VecSeries {
  public:
    VecSeries(int rank, int lo, int hi);

    static VecSeries from_polynomials(const std::vector<IntLaurent>& comps);
    static VecSeries from_monomial_u(const YMonomial& m, int rank);  // u(m)(s)
    static VecSeries basis(int rank, int node, const IntLaurent& poly);

    int rank() const { return rank_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool exact_below() const { return exact_below_; }
    bool exact_above() const { return exact_above_; }
    void set_exactness(bool below, bool above) { exact_below_ = below; exact_above_ = above; }

    long long coeff(int node, int exp) const;  // throws InsufficientWindow if unknown
    void set_coeff(int node, int exp, long long value);

    VecSeries shifted(int s_power) const;                   // times 1 (x) s^n
    friend VecSeries operator+(const VecSeries& a, const VecSeries& b);
    friend VecSeries operator-(const VecSeries& a, const VecSeries& b);
    friend bool operator==(const VecSeries&, const VecSeries&) = default;

    bool known(int exp) const {
        return (exp >= lo_ && exp <= hi_) || (exp < lo_ && exact_below_) ||
               (exp > hi_ && exact_above_);
    }

  private:
    int rank_;
    int lo_, hi_;
    bool exact_below_ = true;
    bool exact_above_ = true;
    std::vector<std::vector<long long>> comp_;  // [node-1][exp-lo]
};

// r x r integer-matrix-valued series, exponents op_lo .. op_lo+depth-1;
// coefficients below op_lo are exactly zero, above the stored range unknown
// unless the operator is marked exact (a Laurent polynomial).
class SeriesOperator {
  public:
    using Mat = std::vector<std::vector<long long>>;

    SeriesOperator(int rank, int lo, std::vector<Mat> mats, bool exact);

    int rank() const { return rank_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(mats_.size()) - 1; }
    bool exact() const { return exact_; }
    const Mat& mat(int exp) const;  // pre: lo <= exp <= hi

    VecSeries apply(const VecSeries& v) const;
    SeriesOperator compose(const SeriesOperator& other, int lo, int hi) const;

  private:
    int rank_;
    int lo_;
    bool exact_;
    std::vector<Mat> mats_;
};

// A = Cartan(sl_{r+1}) - 2I, i.e. -1 on the off-diagonal neighbours.
SeriesOperator::Mat cartan_minus_two(int rank);

// K = 1 (x) s^-1 + A (x) 1 + 1 (x) s.
SeriesOperator operator_K(int rank);

// D = (1 + A s + s^2)^{-1} s expanded at s = 0, truncated after `depth`
// matrix coefficients (exponents 1..depth).  K D = D K = identity on the
// shared window.
SeriesOperator operator_D(int rank, int depth);

// u-series of a fundamental-cluster label, e_i (x) s^{-1+(i+k+1)_2} [k]_s.
VecSeries u_series(const KrLabel& label);

// Constant-term pairing <v,w> [f(s^-1) g(s)]_0.
long long inner(const VecSeries& a, const VecSeries& b);

// epsilon(m1+, m2+) by the double-sum recurrence (ceiling = max spectral
// support + 1, which provably covers every term).
int epsilon(const YMonomial& m1_plus, const YMonomial& m2_plus, int rank);

// Same value through the series calculus, using D u in place of u~ and the
// constant-term pairing; the window widens by doubling on InsufficientWindow.
int epsilon_series(const YMonomial& m1_plus, const YMonomial& m2_plus, int rank);

// d(m1,m1+;m2,m2+) = sum v_{i,j+1}(m1) u_{i,j}(m2) + u_{i,j+1}(m1+) v_{i,j}(m2).
int d_value(const YMonomial& m1, const YMonomial& m1_plus, const YMonomial& m2,
            const YMonomial& m2_plus, int rank);

int gamma(const YMonomial& m1, const YMonomial& m1_plus, const YMonomial& m2,
          const YMonomial& m2_plus, int rank);

enum class TwistMode { Star, StarGamma };

// Bilinear expansion of m1 * m2 = t^{gamma(m1,m2)+epsilon(m1+,m2+)} m1 m2,
// or with the epsilon prefactor stripped in StarGamma mode.
QtCharacter twisted_mul(const QtCharacter& chi1, const QtCharacter& chi2, TwistMode mode,
                        int rank);

// alpha with chi1 * chi2 = t^alpha chi2 * chi1, when it exists.
std::optional<int> t_commutation_exponent(const QtCharacter& chi1, const QtCharacter& chi2,
                                          int rank);

}  // namespace krqt

// Exact sparse algebra of Y-monomials, t-Laurent coefficients and
// (q,t)-characters for type A_r, together with the A-monomial lattice
// machinery (u-exponents, descendant v-exponents).
#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krqt {

// Node/spectral coordinate of a variable Y_{i,j}.
struct YVar {
    int node = 0;      // i, 1..r
    int spectral = 0;  // j, any integer

    friend auto operator<=>(const YVar&, const YVar&) = default;
};

class NotADescendant : public std::runtime_error {
  public:
    explicit NotADescendant(const std::string& what) : std::runtime_error(what) {}
};

// Laurent polynomial in one variable with integer coefficients,
// canonical form: no zero coefficients stored.  Used both for t-coefficients
// of characters and for polynomials in the series variable s.
class IntLaurent {
  public:
    IntLaurent() = default;

    static IntLaurent zero() { return IntLaurent{}; }
    static IntLaurent one() { return monomial(0, 1); }
    static IntLaurent monomial(int exp, long long coeff);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    long long coeff(int exp) const;
    const std::map<int, long long>& coeffs() const { return coeffs_; }

    int min_exp() const;  // pre: not zero
    int max_exp() const;  // pre: not zero

    void add_term(int exp, long long coeff);

    IntLaurent& operator+=(const IntLaurent& other);
    IntLaurent& operator-=(const IntLaurent& other);
    friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
    friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
    friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);

    // Multiplication by t^shift.
    IntLaurent shifted(int shift) const;
    // Substitution t -> t^{-1}.
    IntLaurent reciprocal() const;

    friend bool operator==(const IntLaurent&, const IntLaurent&) = default;
    friend auto operator<=>(const IntLaurent& a, const IntLaurent& b) {
        return std::compare_three_way{}(a.coeffs_, b.coeffs_);
    }

    std::string str(const std::string& var = "t") const;

  private:
    std::map<int, long long> coeffs_;
};

using TLaurent = IntLaurent;

// Sparse Laurent monomial in the variables Y_{i,j}.  Canonical: no zero
// exponents stored; exponents keyed by (i,j) in lexicographic order.
class YMonomial {
  public:
    YMonomial() = default;

    static YMonomial unit() { return YMonomial{}; }
    static YMonomial variable(int node, int spectral, int exp = 1);

    bool is_unit() const { return exps_.empty(); }
    // All exponents strictly positive (the unit monomial counts as dominant).
    bool is_dominant() const;

    int exponent(int node, int spectral) const;
    const std::map<YVar, int>& exponents() const { return exps_; }

    void multiply_by(int node, int spectral, int exp);

    YMonomial& operator*=(const YMonomial& other);
    friend YMonomial operator*(YMonomial a, const YMonomial& b) { return a *= b; }
    YMonomial inverse() const;
    YMonomial pow(int e) const;

    // Spectral support bounds over all stored variables; nullopt for the unit.
    std::optional<int> min_spectral() const;
    std::optional<int> max_spectral() const;
    int max_node() const;  // 0 for the unit

    friend bool operator==(const YMonomial&, const YMonomial&) = default;
    friend auto operator<=>(const YMonomial& a, const YMonomial& b) {
        return std::compare_three_way{}(a.exps_, b.exps_);
    }

    std::string str() const;

  private:
    std::map<YVar, int> exps_;
};

// Non-negative exponents v_{i,j} with m = m_+ * prod A_{i,j}^{-v_{i,j}}.
using VExponents = std::map<YVar, int>;

// u_{i,j}(m): the exponent map of m itself, zero outside the support.
std::map<YVar, int> u_exponents(const YMonomial& m);

// A_{i,j} = Y_{i,j-1} Y_{i,j+1} Y_{i-1,j}^{-1} Y_{i+1,j}^{-1}, with Y_{i',.}=1
// for i' outside 1..r.
YMonomial a_monomial(int node, int spectral, int rank);

// Product of A_{i,j}^{-v_{i,j}} over the support of v.
YMonomial apply_a_inverse(const YMonomial& base, const VExponents& v, int rank);

// Solves m = m_plus * prod A_{i,j}^{-v_{i,j}} for the unique finite
// non-negative v, by the triangular recurrence ascending in the spectral
// index, then verifies by reconstruction.  Throws NotADescendant.
VExponents descendant_v(const YMonomial& m, const YMonomial& m_plus, int rank);

// Finite formal sum of Y-monomials with t-Laurent coefficients plus its
// dominant monomial.  Canonical: no zero coefficients stored.
class QtCharacter {
  public:
    QtCharacter() = default;
    explicit QtCharacter(YMonomial dominant) : dominant_(std::move(dominant)) {}

    // The character "1": single unit term, unit dominant.
    static QtCharacter one();

    const YMonomial& dominant() const { return dominant_; }
    const std::map<YMonomial, TLaurent>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    TLaurent coefficient(const YMonomial& m) const;

    void add_term(const YMonomial& m, const TLaurent& coeff);

    QtCharacter& operator+=(const QtCharacter& other);  // keeps lhs dominant
    friend QtCharacter operator+(QtCharacter a, const QtCharacter& b) { return a += b; }

    // Coefficientwise scaling by a t-Laurent polynomial.
    QtCharacter scaled(const TLaurent& tau) const;

    // Equality of the term maps and dominants.
    friend bool operator==(const QtCharacter&, const QtCharacter&) = default;

    std::string str() const;

  private:
    YMonomial dominant_;
    std::map<YMonomial, TLaurent> terms_;
};

}  // namespace krqt

// Column and general tableaux over staircase diagrams, KR-tableau
// enumeration, the tableau -> Y-monomial maps, the classical collapse, and
// the fundamental cluster labels.
#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "krqt/ylattice.hpp"

namespace krqt {

// Sentinel values so that comparisons against missing boxes are total:
// indices below the head read 0, indices above the tail read "infinity".
inline constexpr int kBelowValue = 0;
inline constexpr int kAboveValue = std::numeric_limits<int>::max();

// Single column of boxes with an integer index per box.  Shape (length i,
// spectral j) with head index (1-i-j)/2; (1-i-j) must be even.
class ColumnTableau {
  public:
    ColumnTableau(int length, int spectral, std::vector<int> values);

    static ColumnTableau dominant(int length, int spectral);

    int length() const { return length_; }
    int spectral() const { return spectral_; }
    int head() const { return (1 - length_ - spectral_) / 2; }
    int tail() const { return head() + length_ - 1; }

    // Value at index p, with 0 / infinity sentinels outside the support.
    int at(int p) const;
    int dominant_at(int p) const;  // 1,2,... down the column, sentinels outside
    bool in_support(int p) const { return p >= head() && p <= tail(); }

    void set(int p, int value);
    const std::vector<int>& values() const { return values_; }

    bool strictly_increasing() const;

    friend bool operator==(const ColumnTableau&, const ColumnTableau&) = default;
    friend auto operator<=>(const ColumnTableau&, const ColumnTableau&) = default;

  private:
    int length_;
    int spectral_;
    std::vector<int> values_;  // indexed p - head()
};

// Columns stacked horizontally on a shared index frame.
class GeneralTableau {
  public:
    GeneralTableau() = default;
    explicit GeneralTableau(std::vector<ColumnTableau> columns) : columns_(std::move(columns)) {}

    const std::vector<ColumnTableau>& columns() const { return columns_; }
    std::vector<ColumnTableau>& columns() { return columns_; }
    std::size_t width() const { return columns_.size(); }
    bool empty() const { return columns_.empty(); }

    // Strict columns and weakly increasing diagonals T_l[p] <= T_{l+1}[p-1].
    bool is_valid_kr() const;

    friend bool operator==(const GeneralTableau&, const GeneralTableau&) = default;
    friend auto operator<=>(const GeneralTableau&, const GeneralTableau&) = default;

    std::string str() const;

  private:
    std::vector<ColumnTableau> columns_;
};

// Label of the KR set B_{k,j}^{(i)} at rank r.
struct KrLabel {
    int rank = 1;
    int node = 1;      // i
    int spectral = 0;  // j
    int width = 0;     // k

    bool valid() const {
        return rank >= 1 && node >= 1 && node <= rank && width >= 0 &&
               ((1 - node - spectral) % 2) == 0;
    }
    friend auto operator<=>(const KrLabel&, const KrLabel&) = default;
};

// Dominant monomial Y_{i,j} Y_{i,j+2} ... Y_{i,j+2k-2}.
YMonomial kr_dominant_monomial(const KrLabel& label);

// The staircase diagram of shape (i,j,k) filled with 1..i down each column.
GeneralTableau dominant_tableau(const KrLabel& label);

// All decorations of the staircase (i,j,k) by 1..r+1 with strictly
// increasing columns and weakly increasing diagonals, in lexicographic
// order of the concatenated column values.  k = 0 yields the empty tableau.
std::vector<GeneralTableau> enumerate_kr_tableaux(const KrLabel& label);

// Monomial of a general tableau: each box of value v at index p contributes
// Y_{v,v-2p-1} (when v <= r) and Y_{v-1,v-2p}^{-1} (when v >= 2).
YMonomial tableau_monomial(const GeneralTableau& t, int rank);

// Closed-form v-exponents: box (l,p) contributes A_{i,i-2p}^{-1} for
// i = (T_l)_dom[p] .. T_l[p]-1.
VExponents tableau_v_closed_form(const GeneralTableau& t, int rank);

// Classical monomial in the y_i obtained by dropping spectral indices.
using ClassicalMonomial = std::map<int, int>;  // node -> exponent, canonical
ClassicalMonomial collapse(const GeneralTableau& t, int rank);
ClassicalMonomial collapse_monomial(const YMonomial& m);

// The q-character sum over B_{k,j}^{(i)}, all t-coefficients 1.
QtCharacter q_character(const KrLabel& label);

// Fundamental-cluster labels (i, k, j = -k + (i+k+1) mod 2) for i in 1..r,
// 1 <= k <= k_max, i-major order.
std::vector<KrLabel> fundamental_cluster(int rank, int k_max);
int cluster_spectral(int node, int width);

}  // namespace krqt

// L-strips, column/left/right compatibility, exchangeable-sequence search by
// exhaustive subsets, and the sigma partition of B x B' with its structural
// checks (monomial conservation, gamma negation, gamma = 0 on fixed points).
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "krqt/blocks.hpp"
#include "krqt/tableaux.hpp"

namespace krqt {

class SearchBudgetExceeded : public std::runtime_error {
  public:
    explicit SearchBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Maximal L-strip in the column pair (C_l, T_l'): the L-block at p0 followed
// by the run of N-blocks through p1, all inside the shared support.
struct LStrip {
    std::size_t c_col = 0;  // l, 0-based, into C
    std::size_t t_col = 0;  // l', 0-based, into T
    int p0 = 0;
    int p1 = 0;
    bool positive = false;  // sign of the leading L-block

    friend auto operator<=>(const LStrip&, const LStrip&) = default;
};

// Strips between one column pair, ordered by start index.
std::vector<LStrip> find_l_strips(const ColumnTableau& c, const ColumnTableau& t);

// Swap the strip interval between the two columns.
void exchange_strip(ColumnTableau& c, ColumnTableau& t, int p0, int p1);

// Strict increase of both columns after the swap.
bool column_compatible(const ColumnTableau& c, const ColumnTableau& t, const LStrip& strip);

// Diagonal conditions against the immediate left (resp. right) neighbour
// columns after swapping just this strip; absent neighbours are vacuous.
bool left_compatible(const ColumnTableau* c_left, const ColumnTableau& c,
                     const ColumnTableau* t_left, const ColumnTableau& t, const LStrip& strip);
bool right_compatible(const ColumnTableau& c, const ColumnTableau* c_right,
                      const ColumnTableau& t, const ColumnTableau* t_right, const LStrip& strip);

// A set of box-disjoint L-strips whose simultaneous swap keeps both
// tableaux valid.
struct ExchangeSequence {
    std::vector<LStrip> strips;  // canonical order: (c_col, t_col, p0)
    bool minimal = false;

    friend auto operator<=>(const ExchangeSequence&, const ExchangeSequence&) = default;
};

// All L-strips over every column pair (C_l, T_l') with touching supports.
std::vector<LStrip> all_l_strips(const GeneralTableau& c, const GeneralTableau& t);

// Swap every strip of the sequence; returns the new pair.
std::pair<GeneralTableau, GeneralTableau> apply_exchange(const GeneralTableau& c,
                                                         const GeneralTableau& t,
                                                         const std::vector<LStrip>& strips);

// Exhaustive subset search over box-disjoint strip sets; throws
// SearchBudgetExceeded past `budget` strips.
std::vector<ExchangeSequence> find_exchangeable_sequences(const GeneralTableau& c,
                                                          const GeneralTableau& t,
                                                          std::size_t budget = 16);

struct SigmaPairing {
    std::size_t from = 0;  // index into the pair list, member of P1
    std::size_t to = 0;    // sigma image, member of P-1
    ExchangeSequence via;
};

struct SigmaViolation {
    std::size_t pair_index = 0;
    std::string what;
};

struct SigmaPartition {
    KrLabel label1, label2;
    std::vector<GeneralTableau> left, right;  // B and B'
    // Pair (a,b) <-> flat index a*right.size()+b.
    std::vector<std::size_t> p0;               // fixed points
    std::vector<SigmaPairing> pairings;        // P1 -> P-1
    std::vector<std::size_t> pairing_failures; // unmatched non-P0 pairs
    std::vector<SigmaViolation> violations;    // gamma/monomial check failures
    bool pass = false;

    std::pair<std::size_t, std::size_t> unflatten(std::size_t idx) const {
        return {idx / right.size(), idx % right.size()};
    }
};

// Greedy canonical matching: pairs scanned in lexicographic order, each
// unmatched pair exchanged along its canonically least sequence (minimal
// sequences first) whose image is still unmatched, preserves the product
// monomial, and negates gamma.  Verifies gamma = 0 on P0 as well.
SigmaPartition sigma_partition(const KrLabel& label1, const KrLabel& label2,
                               std::size_t budget = 16);

// gamma of two general tableaux through the monomial-level definition.
int tableau_gamma(const GeneralTableau& c, const GeneralTableau& t, int rank);

}  // namespace krqt

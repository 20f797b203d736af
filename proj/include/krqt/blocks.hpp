// Block classification of column-tableau pairs, block-tableaux, pair types,
// and the closed-form boundary expression for gamma on column pairs.
#pragma once

#include <string>
#include <vector>

#include "krqt/tableaux.hpp"

namespace krqt {

enum class BlockLetter { LPlus, LMinus, NPlus, NMinus, U };

std::string to_string(BlockLetter b);

enum class PairType { Fundamental, AntiFundamental, Regular, AntiRegular };

std::string to_string(PairType t);

// L_p(C,T): +1 for an L+ block, -1 for an L-, 0 otherwise.
int l_value(const ColumnTableau& c, const ColumnTableau& t, int p);
// N_p(C,T): +1 for an N+ block, -1 for an N-, 0 otherwise.
int n_value(const ColumnTableau& c, const ColumnTableau& t, int p);

// Exactly one letter applies at each index of a pair of KR columns.
BlockLetter classify_block(const ColumnTableau& c, const ColumnTableau& t, int p);

// Ties resolve in the order fundamental > anti-fundamental > regular.
PairType pair_type(const ColumnTableau& c, const ColumnTableau& t);

// Letters on the window [h, t+1] with h = max(heads), t = min(tails).
struct BlockTableau {
    int h = 0;
    int t = 0;  // letters cover h..t+1; empty interior when h > t
    std::vector<BlockLetter> letters;

    BlockLetter at(int p) const { return letters.at(static_cast<std::size_t>(p - h)); }
    std::string str() const;
};

BlockTableau block_tableau(const ColumnTableau& c, const ColumnTableau& t);

// The closed form applies when the supports overlap or are adjacent
// (h <= t+1); fully separated supports fall back to the definitional gamma.
bool block_formula_applicable(const ColumnTableau& c, const ColumnTableau& t);

// Sum of L_p over the shared support plus the boundary term at t+1:
// N_{t+1} for (anti-)fundamental pairs, L_{t+1} otherwise.
int gamma_block_formula(const ColumnTableau& c, const ColumnTableau& t);

}  // namespace krqt

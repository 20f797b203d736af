#include <doctest.h>

#include <vector>

#include "krqt/blocks.hpp"
#include "krqt/twist.hpp"

using namespace krqt;

namespace {

ColumnTableau col(int spectral, std::vector<int> values) {
    const int len = static_cast<int>(values.size());
    return ColumnTableau(len, spectral, std::move(values));
}

// Column of given values whose head index is `head`.
ColumnTableau col_at_head(int head, std::vector<int> values) {
    const int len = static_cast<int>(values.size());
    return ColumnTableau(len, 1 - len - 2 * head, std::move(values));
}

int definitional_gamma(const ColumnTableau& c, const ColumnTableau& t, int rank) {
    const YMonomial mc = tableau_monomial(GeneralTableau({c}), rank);
    const YMonomial mt = tableau_monomial(GeneralTableau({t}), rank);
    return gamma(mc, YMonomial::variable(c.length(), c.spectral()), mt,
                 YMonomial::variable(t.length(), t.spectral()), rank);
}

}  // namespace

TEST_CASE("block letters of a mixed five-against-three column pair") {
    // C = (1,3,4,7,8) at indices -1..3, T = (2,3,9) at 0..2.
    const ColumnTableau c = col_at_head(-1, {1, 3, 4, 7, 8});
    const ColumnTableau t = col_at_head(0, {2, 3, 9});
    REQUIRE(c.head() == -1);
    REQUIRE(t.head() == 0);

    const BlockTableau bt = block_tableau(c, t);
    CHECK(bt.h == 0);
    CHECK(bt.t == 2);
    CHECK(bt.at(0) == BlockLetter::LPlus);
    CHECK(bt.at(1) == BlockLetter::NMinus);
    CHECK(bt.at(2) == BlockLetter::LMinus);
    CHECK(bt.at(3) == BlockLetter::NPlus);
}

TEST_CASE("identical columns give U blocks everywhere") {
    const ColumnTableau c = col_at_head(0, {2, 4, 7});
    const BlockTableau bt = block_tableau(c, c);
    for (int p = bt.h; p <= bt.t; ++p) CHECK(bt.at(p) == BlockLetter::U);
    CHECK(bt.at(bt.t + 1) == BlockLetter::U);  // both read infinity past the tail
}

TEST_CASE("the rank-1 counterexample pair classifies as regular with L- boundary") {
    const ColumnTableau c = col(0, {2});    // Y_{1,2}^{-1} in chi_{1,0}
    const ColumnTableau t = col(2, {1});    // Y_{1,2} in chi_{1,2}
    REQUIRE(t.head() == -1);
    CHECK(pair_type(c, t) == PairType::Regular);
    CHECK(classify_block(c, t, 0) == BlockLetter::LMinus);
    CHECK(block_formula_applicable(c, t));
    CHECK(gamma_block_formula(c, t) == -1);
    CHECK(definitional_gamma(c, t, 1) == -1);
}

TEST_CASE("pair types with tie precedence") {
    const ColumnTableau a = col_at_head(0, {1, 2});
    const ColumnTableau b = col_at_head(0, {1, 3});
    CHECK(pair_type(a, b) == PairType::Fundamental);  // equal shapes resolve to fundamental

    const ColumnTableau nested = col_at_head(1, {2});
    CHECK(pair_type(nested, a) == PairType::Fundamental);
    CHECK(pair_type(a, nested) == PairType::AntiFundamental);

    const ColumnTableau lower = col_at_head(1, {2, 3});
    CHECK(pair_type(lower, a) == PairType::Regular);
    CHECK(pair_type(a, lower) == PairType::AntiRegular);
}

TEST_CASE("dominant pairs have gamma zero through both routes") {
    for (int len_c = 1; len_c <= 3; ++len_c)
        for (int len_t = 1; len_t <= 3; ++len_t)
            for (int head_t = -2; head_t <= 2; ++head_t) {
                const ColumnTableau c = ColumnTableau::dominant(len_c, 1 - len_c);
                const ColumnTableau t =
                    ColumnTableau::dominant(len_t, 1 - len_t - 2 * head_t);
                CHECK(definitional_gamma(c, t, 4) == 0);
                if (block_formula_applicable(c, t)) CHECK(gamma_block_formula(c, t) == 0);
            }
}

TEST_CASE("mixed column pair gamma agrees with the definitional oracle") {
    // The (L+,N-,L-,N+) pair from above; letters need rank >= 8 to be valid.
    const ColumnTableau c = col_at_head(-1, {1, 3, 4, 7, 8});
    const ColumnTableau t = col_at_head(0, {2, 3, 9});
    CHECK(gamma_block_formula(c, t) == definitional_gamma(c, t, 8));
    CHECK(gamma_block_formula(t, c) == definitional_gamma(t, c, 8));
}

namespace {

struct PairScan {
    std::vector<std::pair<ColumnTableau, ColumnTableau>> pairs;
};

// Every ordered pair of columns occurring in fundamental-cluster characters.
PairScan cluster_column_pairs(int rank, int k_max) {
    PairScan scan;
    std::vector<ColumnTableau> columns;
    for (const auto& label : fundamental_cluster(rank, k_max))
        for (const auto& t : enumerate_kr_tableaux(label))
            for (const auto& c : t.columns()) columns.push_back(c);
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());
    for (const auto& a : columns)
        for (const auto& b : columns) scan.pairs.push_back({a, b});
    return scan;
}

}  // namespace

TEST_CASE("block formula matches definitional gamma on cluster column pairs") {
    for (int rank = 1; rank <= 3; ++rank) {
        const PairScan scan = cluster_column_pairs(rank, 3);
        for (const auto& [c, t] : scan.pairs) {
            if (!block_formula_applicable(c, t)) continue;
            const int lhs = gamma_block_formula(c, t);
            CHECK(lhs == definitional_gamma(c, t, rank));
            CHECK(lhs == -gamma_block_formula(t, c));
        }
    }
}

TEST_CASE("letter exclusivity and forbidden transitions on cluster pairs") {
    const PairScan scan = cluster_column_pairs(3, 3);
    for (const auto& [c, t] : scan.pairs) {
        if (std::max(c.head(), t.head()) > std::min(c.tail(), t.tail()) + 1) continue;
        const BlockTableau bt = block_tableau(c, t);  // classify_block asserts exclusivity
        for (int p = bt.h; p <= bt.t; ++p) {
            const BlockLetter cur = bt.at(p), nxt = bt.at(p + 1);
            if (cur == BlockLetter::LPlus) CHECK(nxt != BlockLetter::NPlus);
            if (cur == BlockLetter::LMinus) CHECK(nxt != BlockLetter::NMinus);
            if (cur == BlockLetter::NPlus) CHECK(nxt != BlockLetter::NMinus);
            if (cur == BlockLetter::NMinus) CHECK(nxt != BlockLetter::NPlus);
            if (cur == BlockLetter::U)
                CHECK((nxt != BlockLetter::NPlus && nxt != BlockLetter::NMinus));
        }
        // Head/tail restrictions, in the form the gamma calculus uses.
        const PairType type = pair_type(c, t);
        if (type == PairType::Fundamental || type == PairType::Regular)
            CHECK(bt.at(bt.h) != BlockLetter::NMinus);
        if (type == PairType::Fundamental) CHECK(bt.at(bt.t + 1) != BlockLetter::NPlus);
        if (type == PairType::Regular) CHECK(bt.at(bt.t + 1) != BlockLetter::NMinus);
    }
}

TEST_CASE("boundary tie cases use the N boundary either way") {
    // For equal shapes both the fundamental and anti-fundamental readings
    // apply; the boundary term must not depend on the tie resolution.
    const PairScan scan = cluster_column_pairs(2, 2);
    for (const auto& [c, t] : scan.pairs) {
        if (c.head() != t.head() || c.tail() != t.tail()) continue;
        const int h = c.head(), tt = c.tail();
        int interior = 0;
        for (int p = h; p <= tt; ++p) interior += l_value(c, t, p);
        CHECK(gamma_block_formula(c, t) == interior + n_value(c, t, tt + 1));
    }
}

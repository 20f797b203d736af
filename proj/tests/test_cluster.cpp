#include <doctest.h>

#include <vector>

#include "krqt/cluster.hpp"

using namespace krqt;

namespace {

// Frozen rank-1 reference windows (9 x 9).
const std::vector<std::vector<int>> kB9 = {
    {0, 1, 0, 0, 0, 0, 0, 0, 0},  {-1, 0, -1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, -1, 0, -1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 1, 0, 0, 0},  {0, 0, 0, 0, -1, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 1, 0},  {0, 0, 0, 0, 0, 0, -1, 0, -1}, {0, 0, 0, 0, 0, 0, 0, 1, 0}};

const std::vector<std::vector<int>> kEps9 = {
    {0, -1, 0, 1, 0, -1, 0, 1, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 0},  {0, 0, 0, -1, 0, 1, 0, -1, 0},
    {-1, 0, 1, 0, 0, 0, 0, 0, 0},  {0, 0, 0, 0, 0, -1, 0, 1, 0}, {1, 0, -1, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, -1, 0},  {-1, 0, 1, 0, -1, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}};

}  // namespace

TEST_CASE("b_entry on the rank-1 quiver") {
    CHECK(b_entry(ClusterIndex{1, 1}, ClusterIndex{1, 2}, 1) == 1);
    CHECK(b_entry(ClusterIndex{1, 2}, ClusterIndex{1, 1}, 1) == -1);
    CHECK(b_entry(ClusterIndex{1, 1}, ClusterIndex{1, 3}, 1) == 0);
    // No neighbour below the k = 1 boundary.
    CHECK(b_entry(ClusterIndex{1, 5}, ClusterIndex{1, 5}, 1) == 0);
}

TEST_CASE("matrix windows are antisymmetric and integral") {
    for (int rank = 1; rank <= 3; ++rank) {
        const MatrixWindow b = b_window(rank, 4);
        const MatrixWindow lam = lambda_window(rank, 4);
        const std::size_t n = b.index.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) {
                CHECK(b.entries[a][c] == -b.entries[c][a]);
                CHECK(lam.entries[a][c] == -lam.entries[c][a]);
                CHECK(lam.entries[a][c] % 2 == 0);  // Lambda = 2 epsilon
            }
    }
}

TEST_CASE("spectral parameter of cluster vertices") {
    CHECK(ClusterIndex{1, 1}.spectral() == 0);
    CHECK(ClusterIndex{1, 2}.spectral() == -2);
    CHECK(ClusterIndex{1, 4}.spectral() == -4);
    CHECK(ClusterIndex{1, 1}.label(2).valid());
    CHECK(ClusterIndex{2, 3}.label(3).valid());
}

TEST_CASE("compatibility_check") {
    SUBCASE("rank 1 window 6 passes with diagonal 2") {
        const CompatReport rep = compatibility_check(1, 6);
        CHECK(rep.pass);
        CHECK(rep.diagonal == 2);
        CHECK(rep.violations.empty());
    }
    SUBCASE("ranks 2 and 3 pass") {
        CHECK(compatibility_check(2, 4).pass);
        CHECK(compatibility_check(3, 4).pass);
    }
    SUBCASE("too small a window is a usage error") {
        CHECK_THROWS_AS(compatibility_check(1, 1), UsageWindow);
    }
}

TEST_CASE("epsilon window times B is the identity on checked columns") {
    // The normalization-independent statements: eps.B = Id and (2 eps).B = 2 Id.
    for (int rank = 1; rank <= 2; ++rank) {
        const int kmax = 5;
        const MatrixWindow eps = epsilon_window(rank, kmax);
        const MatrixWindow b = b_window(rank, kmax);
        const std::size_t n = eps.index.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c) {
                if (eps.index[c].width > kmax - 1) continue;
                long long acc = 0;
                for (std::size_t m = 0; m < n; ++m)
                    acc += static_cast<long long>(eps.entries[a][m]) * b.entries[m][c];
                CHECK(acc == (eps.index[a] == eps.index[c] ? 1 : 0));
            }
    }
}

TEST_CASE("t-system verification") {
    SUBCASE("rank 1, k = 1, j = 0 LHS is chi_{2,0} + t^-1") {
        const IdentityReport rep = verify_t_system(1, 1, 1, 0);
        CHECK(rep.pass);
        const QtCharacter lhs =
            twisted_mul(q_character(KrLabel{1, 1, 0, 1}), q_character(KrLabel{1, 1, 2, 1}),
                        TwistMode::StarGamma, 1);
        QtCharacter expected = q_character(KrLabel{1, 1, 0, 2});
        expected += QtCharacter::one().scaled(TLaurent::monomial(-1, 1));
        CHECK(lhs.terms() == expected.terms());
    }
    SUBCASE("rank 2 instance") { CHECK(verify_t_system(2, 1, 1, 0).pass); }
    SUBCASE("rank 3 interior node, width 2") { CHECK(verify_t_system(3, 2, 2, 1).pass); }
    SUBCASE("invalid parity is reported, not computed") {
        CHECK_FALSE(verify_t_system(2, 1, 1, 1).pass);
    }
}

TEST_CASE("mutation exponents and reduction identities") {
    SUBCASE("rank 1, k = 1, j = 0 reproduces the T-system coefficients") {
        const MutationExponents e = mutation_exponents(1, 1, 1, 0);
        CHECK(e.first == 1);    // epsilon(Y_{1,0}, Y_{2,0}) with empty partners
        CHECK(e.second == 0);   // boundary characters are units
        CHECK(e.reduction_first_ok);
        CHECK(e.reduction_second_ok);
        CHECK(e.pairing_unit_ok);
    }
    SUBCASE("the pairing constant is 1 across the grid") {
        for (int rank = 1; rank <= 3; ++rank)
            for (int i = 1; i <= rank; ++i)
                for (int k = 1; k <= 2; ++k)
                    for (int j = -3; j <= 3; ++j) {
                        if (((1 - i - j) % 2 + 2) % 2 != 0) continue;
                        const MutationExponents e = mutation_exponents(rank, i, k, j);
                        CHECK(e.pairing_unit_ok);
                        CHECK(e.reduction_first_ok);
                        CHECK(e.reduction_second_ok);
                    }
    }
}

TEST_CASE("quantum mutation verification") {
    CHECK(verify_quantum_mutation(1, 1, 1, 0).pass);
    CHECK(verify_quantum_mutation(1, 1, 2, -2).pass);
    CHECK(verify_quantum_mutation(2, 2, 1, -1).pass);
    CHECK(verify_quantum_mutation(3, 2, 1, 1).pass);
}

TEST_CASE("k-direction counterexample") {
    const CounterexampleReport rep = k_direction_counterexample();
    CHECK(rep.pass);
    CHECK(rep.alpha_absent);
    CHECK(rep.forward_constant == TLaurent::monomial(-1, 1));
    CHECK(rep.reversed_constant == TLaurent::monomial(1, 1));

    // The absent-alpha verdict does not depend on the operand order.
    const QtCharacter chi10 = q_character(KrLabel{1, 1, 0, 1});
    const QtCharacter chi12 = q_character(KrLabel{1, 1, 2, 1});
    CHECK_FALSE(t_commutation_exponent(chi10, chi12, 1).has_value());
    CHECK_FALSE(t_commutation_exponent(chi12, chi10, 1).has_value());
}

TEST_CASE("a1 tables match the reference matrices and their closed forms") {
    const A1Tables t = a1_tables(9);
    CHECK(t.b == kB9);
    CHECK(t.eps == kEps9);
    CHECK(t.b_closed_form == kB9);
    CHECK(t.eps_closed_form == kEps9);
    CHECK(t.closed_forms_match);

    SUBCASE("sub-window consistency") {
        const A1Tables small = a1_tables(2);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                CHECK(small.b[a][b] == kB9[a][b]);
                CHECK(small.eps[a][b] == kEps9[a][b]);
            }
    }
    SUBCASE("closed forms are antisymmetric under swapping the variables") {
        for (int a = 0; a < 9; ++a)
            for (int b = 0; b < 9; ++b) {
                CHECK(t.b_closed_form[a][b] == -t.b_closed_form[b][a]);
                CHECK(t.eps_closed_form[a][b] == -t.eps_closed_form[b][a]);
            }
    }
}

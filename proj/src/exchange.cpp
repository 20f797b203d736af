#include "krqt/exchange.hpp"

#include <algorithm>

#include "krqt/twist.hpp"

namespace krqt {

std::vector<LStrip> find_l_strips(const ColumnTableau& c, const ColumnTableau& t) {
    std::vector<LStrip> out;
    const int h = std::max(c.head(), t.head());
    const int tt = std::min(c.tail(), t.tail());
    int p = h;
    while (p <= tt) {
        const int l = l_value(c, t, p);
        if (l == 0) {
            ++p;
            continue;
        }
        LStrip strip;
        strip.p0 = p;
        strip.positive = l > 0;
        int q = p + 1;
        while (q <= tt && n_value(c, t, q) != 0) ++q;
        strip.p1 = q - 1;
        out.push_back(strip);
        p = q;
    }
    return out;
}

void exchange_strip(ColumnTableau& c, ColumnTableau& t, int p0, int p1) {
    for (int p = p0; p <= p1; ++p) {
        const int cv = c.at(p), tv = t.at(p);
        c.set(p, tv);
        t.set(p, cv);
    }
}

bool column_compatible(const ColumnTableau& c, const ColumnTableau& t, const LStrip& strip) {
    ColumnTableau nc = c, nt = t;
    exchange_strip(nc, nt, strip.p0, strip.p1);
    return nc.strictly_increasing() && nt.strictly_increasing();
}

namespace {

// X_left[p] <= X[p-1] for every index of X_left, restricted to the boxes the
// swap touched (p-1 in [p0,p1]).
bool diagonal_ok_left(const ColumnTableau* left, const ColumnTableau& mid, int p0, int p1) {
    if (left == nullptr) return true;
    for (int p = p0 + 1; p <= p1 + 1; ++p) {
        if (!left->in_support(p) || !mid.in_support(p - 1)) continue;
        if (left->at(p) > mid.at(p - 1)) return false;
    }
    return true;
}

// X[p] <= X_right[p-1] restricted to touched boxes (p in [p0,p1]).
bool diagonal_ok_right(const ColumnTableau& mid, const ColumnTableau* right, int p0, int p1) {
    if (right == nullptr) return true;
    for (int p = p0; p <= p1; ++p) {
        if (!mid.in_support(p) || !right->in_support(p - 1)) continue;
        if (mid.at(p) > right->at(p - 1)) return false;
    }
    return true;
}

}  // namespace

bool left_compatible(const ColumnTableau* c_left, const ColumnTableau& c,
                     const ColumnTableau* t_left, const ColumnTableau& t, const LStrip& strip) {
    ColumnTableau nc = c, nt = t;
    exchange_strip(nc, nt, strip.p0, strip.p1);
    return diagonal_ok_left(c_left, nc, strip.p0, strip.p1) &&
           diagonal_ok_left(t_left, nt, strip.p0, strip.p1);
}

bool right_compatible(const ColumnTableau& c, const ColumnTableau* c_right,
                      const ColumnTableau& t, const ColumnTableau* t_right, const LStrip& strip) {
    ColumnTableau nc = c, nt = t;
    exchange_strip(nc, nt, strip.p0, strip.p1);
    return diagonal_ok_right(nc, c_right, strip.p0, strip.p1) &&
           diagonal_ok_right(nt, t_right, strip.p0, strip.p1);
}

std::vector<LStrip> all_l_strips(const GeneralTableau& c, const GeneralTableau& t) {
    std::vector<LStrip> out;
    for (std::size_t l = 0; l < c.width(); ++l)
        for (std::size_t lp = 0; lp < t.width(); ++lp) {
            for (LStrip s : find_l_strips(c.columns()[l], t.columns()[lp])) {
                s.c_col = l;
                s.t_col = lp;
                out.push_back(s);
            }
        }
    return out;
}

std::pair<GeneralTableau, GeneralTableau> apply_exchange(const GeneralTableau& c,
                                                         const GeneralTableau& t,
                                                         const std::vector<LStrip>& strips) {
    GeneralTableau nc = c, nt = t;
    for (const auto& s : strips)
        exchange_strip(nc.columns()[s.c_col], nt.columns()[s.t_col], s.p0, s.p1);
    return {std::move(nc), std::move(nt)};
}

namespace {

// Strips sharing a box on either side cannot be swapped simultaneously.
bool strips_conflict(const LStrip& a, const LStrip& b) {
    const bool overlap = a.p0 <= b.p1 && b.p0 <= a.p1;
    return overlap && (a.c_col == b.c_col || a.t_col == b.t_col);
}

}  // namespace

std::vector<ExchangeSequence> find_exchangeable_sequences(const GeneralTableau& c,
                                                          const GeneralTableau& t,
                                                          std::size_t budget) {
    const std::vector<LStrip> strips = all_l_strips(c, t);
    const std::size_t n = strips.size();
    if (n > budget)
        throw SearchBudgetExceeded("find_exchangeable_sequences: " + std::to_string(n) +
                                   " strips exceed the subset-search budget");

    std::vector<std::size_t> conflict(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && strips_conflict(strips[a], strips[b]))
                conflict[a] |= std::size_t{1} << b;

    std::vector<ExchangeSequence> found;
    std::vector<std::size_t> valid_masks;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        bool clash = false;
        std::vector<LStrip> subset;
        for (std::size_t b = 0; b < n && !clash; ++b) {
            if (!(mask & (std::size_t{1} << b))) continue;
            clash = (conflict[b] & mask) != 0;
            subset.push_back(strips[b]);
        }
        if (clash) continue;
        auto [nc, nt] = apply_exchange(c, t, subset);
        if (nc.is_valid_kr() && nt.is_valid_kr()) {
            found.push_back(ExchangeSequence{std::move(subset), false});
            valid_masks.push_back(mask);
        }
    }
    for (std::size_t a = 0; a < found.size(); ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < found.size() && minimal; ++b)
            if (b != a && (valid_masks[b] & valid_masks[a]) == valid_masks[b]) minimal = false;
        found[a].minimal = minimal;
    }
    return found;
}

int tableau_gamma(const GeneralTableau& c, const GeneralTableau& t, int rank) {
    // The dominant of a general tableau is the product of Y_{i_l, j_l} over
    // its column diagrams.
    YMonomial dc, dt;
    for (const auto& col : c.columns()) dc.multiply_by(col.length(), col.spectral(), 1);
    for (const auto& col : t.columns()) dt.multiply_by(col.length(), col.spectral(), 1);
    return gamma(tableau_monomial(c, rank), dc, tableau_monomial(t, rank), dt, rank);
}

SigmaPartition sigma_partition(const KrLabel& label1, const KrLabel& label2, std::size_t budget) {
    if (label1.rank != label2.rank)
        throw std::invalid_argument("sigma_partition: labels have different ranks");
    SigmaPartition part;
    part.label1 = label1;
    part.label2 = label2;
    part.left = enumerate_kr_tableaux(label1);   // emitted in sorted order,
    part.right = enumerate_kr_tableaux(label2);  // which `locate` relies on
    const int rank = label1.rank;
    const std::size_t ncols = part.right.size();
    const std::size_t total = part.left.size() * ncols;

    enum class State { Unassigned, P0, P1, PMinus1, Failed };
    std::vector<State> state(total, State::Unassigned);
    std::vector<std::vector<ExchangeSequence>> sequences(total);

    for (std::size_t idx = 0; idx < total; ++idx) {
        const auto [a, b] = part.unflatten(idx);
        sequences[idx] = find_exchangeable_sequences(part.left[a], part.right[b], budget);
        if (sequences[idx].empty()) {
            state[idx] = State::P0;
            part.p0.push_back(idx);
        }
    }

    auto locate = [&](const GeneralTableau& lc, const GeneralTableau& rt) -> std::optional<std::size_t> {
        const auto la = std::lower_bound(part.left.begin(), part.left.end(), lc);
        const auto rb = std::lower_bound(part.right.begin(), part.right.end(), rt);
        if (la == part.left.end() || !(*la == lc)) return std::nullopt;
        if (rb == part.right.end() || !(*rb == rt)) return std::nullopt;
        return static_cast<std::size_t>(la - part.left.begin()) * ncols +
               static_cast<std::size_t>(rb - part.right.begin());
    };

    for (std::size_t idx = 0; idx < total; ++idx) {
        if (state[idx] != State::Unassigned) continue;
        const auto [a, b] = part.unflatten(idx);
        const int g = tableau_gamma(part.left[a], part.right[b], rank);
        const YMonomial prod =
            tableau_monomial(part.left[a], rank) * tableau_monomial(part.right[b], rank);

        // Candidates in canonical order, minimal sequences first; gamma
        // negation can require a non-minimal sequence, so the search widens
        // past the minimal ones rather than failing.
        std::vector<const ExchangeSequence*> candidates;
        for (const auto& seq : sequences[idx])
            if (seq.minimal) candidates.push_back(&seq);
        for (const auto& seq : sequences[idx])
            if (!seq.minimal) candidates.push_back(&seq);

        bool matched = false;
        for (const auto* seq : candidates) {
            auto [nc, nt] = apply_exchange(part.left[a], part.right[b], seq->strips);
            const auto image = locate(nc, nt);
            if (!image || *image == idx || state[*image] != State::Unassigned) continue;
            const int g_img = tableau_gamma(nc, nt, rank);
            const YMonomial prod_img = tableau_monomial(nc, rank) * tableau_monomial(nt, rank);
            if (prod_img != prod) {
                part.violations.push_back({idx, "exchange does not preserve the product monomial"});
                continue;
            }
            if (g_img != -g) continue;  // try the next sequence
            state[idx] = State::P1;
            state[*image] = State::PMinus1;
            part.pairings.push_back({idx, *image, *seq});
            matched = true;
            break;
        }
        if (!matched) {
            state[idx] = State::Failed;
            part.pairing_failures.push_back(idx);
        }
    }

    for (std::size_t idx : part.p0) {
        const auto [a, b] = part.unflatten(idx);
        const int g = tableau_gamma(part.left[a], part.right[b], rank);
        if (g != 0) {
            std::string what = "no exchangeable sequence but gamma = " + std::to_string(g);
            for (const auto& cc : part.left[a].columns())
                for (const auto& tc : part.right[b].columns()) {
                    if (std::max(cc.head(), tc.head()) > std::min(cc.tail(), tc.tail()) + 1)
                        continue;
                    what += "\nblocks of a " + to_string(pair_type(cc, tc)) + " column pair:\n" +
                            block_tableau(cc, tc).str();
                }
            part.violations.push_back({idx, what});
        }
    }

    part.pass = part.violations.empty() && part.pairing_failures.empty();
    return part;
}

}  // namespace krqt

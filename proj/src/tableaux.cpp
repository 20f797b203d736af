#include "krqt/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace krqt {

ColumnTableau::ColumnTableau(int length, int spectral, std::vector<int> values)
    : length_(length), spectral_(spectral), values_(std::move(values)) {
    if (length_ < 1) throw std::invalid_argument("ColumnTableau: length must be >= 1");
    if (((1 - length_ - spectral_) % 2) != 0)
        throw std::invalid_argument("ColumnTableau: (1 - i - j) must be even");
    if (static_cast<int>(values_.size()) != length_)
        throw std::invalid_argument("ColumnTableau: value count does not match length");
}

ColumnTableau ColumnTableau::dominant(int length, int spectral) {
    std::vector<int> vals(length);
    for (int q = 0; q < length; ++q) vals[q] = q + 1;
    return ColumnTableau(length, spectral, std::move(vals));
}

int ColumnTableau::at(int p) const {
    if (p < head()) return kBelowValue;
    if (p > tail()) return kAboveValue;
    return values_[p - head()];
}

int ColumnTableau::dominant_at(int p) const {
    if (p < head()) return kBelowValue;
    if (p > tail()) return kAboveValue;
    return p - head() + 1;
}

void ColumnTableau::set(int p, int value) {
    if (!in_support(p)) throw std::out_of_range("ColumnTableau::set: index outside support");
    values_[p - head()] = value;
}

bool ColumnTableau::strictly_increasing() const {
    for (int q = 1; q < length_; ++q)
        if (values_[q - 1] >= values_[q]) return false;
    return true;
}

bool GeneralTableau::is_valid_kr() const {
    for (const auto& col : columns_)
        if (!col.strictly_increasing()) return false;
    for (std::size_t l = 0; l + 1 < columns_.size(); ++l) {
        const auto& left = columns_[l];
        const auto& right = columns_[l + 1];
        for (int p = left.head(); p <= left.tail(); ++p) {
            if (!right.in_support(p - 1)) continue;
            if (left.at(p) > right.at(p - 1)) return false;
        }
    }
    return true;
}

std::string GeneralTableau::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t l = 0; l < columns_.size(); ++l) {
        if (l) os << " ";
        os << "(";
        const auto& col = columns_[l];
        for (int q = 0; q < col.length(); ++q) {
            if (q) os << ",";
            os << col.values()[q];
        }
        os << ")@" << col.head();
    }
    os << "]";
    return os.str();
}

YMonomial kr_dominant_monomial(const KrLabel& label) {
    YMonomial m;
    for (int l = 0; l < label.width; ++l) m.multiply_by(label.node, label.spectral + 2 * l, 1);
    return m;
}

GeneralTableau dominant_tableau(const KrLabel& label) {
    if (!label.valid()) throw std::invalid_argument("dominant_tableau: invalid label");
    std::vector<ColumnTableau> cols;
    cols.reserve(label.width);
    for (int l = 0; l < label.width; ++l)
        cols.push_back(ColumnTableau::dominant(label.node, label.spectral + 2 * l));
    return GeneralTableau(std::move(cols));
}

namespace {

// Depth-first fill, columns left to right, boxes top to bottom.  The lower
// bound at (l,p) combines strictness in the column with the diagonal bound
// from the previous column.
void enumerate_rec(const KrLabel& label, std::vector<ColumnTableau>& cols, int l, int q,
                   std::vector<GeneralTableau>& out) {
    const int i = label.node, r = label.rank;
    if (l == label.width) {
        out.emplace_back(cols);
        return;
    }
    if (q == i) {
        enumerate_rec(label, cols, l + 1, 0, out);
        return;
    }
    auto& col = cols[l];
    int p = col.head() + q;
    int lo = q > 0 ? col.values()[q - 1] + 1 : 1;
    if (l > 0) lo = std::max(lo, cols[l - 1].at(p + 1));
    for (int v = lo; v <= r + 1; ++v) {
        col.set(p, v);
        enumerate_rec(label, cols, l, q + 1, out);
    }
}

}  // namespace

std::vector<GeneralTableau> enumerate_kr_tableaux(const KrLabel& label) {
    if (!label.valid()) throw std::invalid_argument("enumerate_kr_tableaux: invalid label");
    if (label.width == 0) return {GeneralTableau{}};
    auto cols = dominant_tableau(label).columns();
    std::vector<GeneralTableau> out;
    enumerate_rec(label, cols, 0, 0, out);
    return out;
}

YMonomial tableau_monomial(const GeneralTableau& t, int rank) {
    YMonomial m;
    for (const auto& col : t.columns()) {
        for (int p = col.head(); p <= col.tail(); ++p) {
            int v = col.at(p);
            if (v < 1 || v > rank + 1)
                throw std::invalid_argument("tableau_monomial: value outside 1..r+1");
            if (v <= rank) m.multiply_by(v, v - 2 * p - 1, 1);
            if (v >= 2) m.multiply_by(v - 1, v - 2 * p, -1);
        }
    }
    return m;
}

VExponents tableau_v_closed_form(const GeneralTableau& t, int rank) {
    VExponents v;
    for (const auto& col : t.columns()) {
        for (int p = col.head(); p <= col.tail(); ++p) {
            for (int i = col.dominant_at(p); i <= col.at(p) - 1; ++i) {
                if (i < 1 || i > rank)
                    throw std::invalid_argument("tableau_v_closed_form: node outside 1..r");
                ++v[{i, i - 2 * p}];
            }
        }
    }
    return v;
}

ClassicalMonomial collapse(const GeneralTableau& t, int rank) {
    return collapse_monomial(tableau_monomial(t, rank));
}

ClassicalMonomial collapse_monomial(const YMonomial& m) {
    ClassicalMonomial out;
    for (const auto& [var, e] : m.exponents()) {
        out[var.node] += e;
        if (out[var.node] == 0) out.erase(var.node);
    }
    return out;
}

QtCharacter q_character(const KrLabel& label) {
    QtCharacter chi{kr_dominant_monomial(label)};
    for (const auto& t : enumerate_kr_tableaux(label))
        chi.add_term(tableau_monomial(t, label.rank), TLaurent::one());
    return chi;
}

int cluster_spectral(int node, int width) { return -width + ((node + width + 1) % 2 + 2) % 2; }

std::vector<KrLabel> fundamental_cluster(int rank, int k_max) {
    if (k_max < 1) throw std::invalid_argument("fundamental_cluster: k_max must be >= 1");
    std::vector<KrLabel> out;
    for (int i = 1; i <= rank; ++i)
        for (int k = 1; k <= k_max; ++k)
            out.push_back(KrLabel{rank, i, cluster_spectral(i, k), k});
    return out;
}

}  // namespace krqt

#include "krqt/blocks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace krqt {

std::string to_string(BlockLetter b) {
    switch (b) {
        case BlockLetter::LPlus: return "L+";
        case BlockLetter::LMinus: return "L-";
        case BlockLetter::NPlus: return "N+";
        case BlockLetter::NMinus: return "N-";
        case BlockLetter::U: return "U";
    }
    return "?";
}

std::string to_string(PairType t) {
    switch (t) {
        case PairType::Fundamental: return "fundamental";
        case PairType::AntiFundamental: return "anti-fundamental";
        case PairType::Regular: return "regular";
        case PairType::AntiRegular: return "anti-regular";
    }
    return "?";
}

int l_value(const ColumnTableau& c, const ColumnTableau& t, int p) {
    if (c.at(p - 1) < t.at(p) && t.at(p) < c.at(p)) return 1;
    if (t.at(p - 1) < c.at(p) && c.at(p) < t.at(p)) return -1;
    return 0;
}

int n_value(const ColumnTableau& c, const ColumnTableau& t, int p) {
    if (c.at(p) <= t.at(p - 1)) return 1;
    if (t.at(p) <= c.at(p - 1)) return -1;
    return 0;
}

BlockLetter classify_block(const ColumnTableau& c, const ColumnTableau& t, int p) {
    const bool u = c.at(p) == t.at(p);
    const int l = l_value(c, t, p);
    const int n = n_value(c, t, p);
    const int hits = (u ? 1 : 0) + (l != 0 ? 1 : 0) + (n != 0 ? 1 : 0);
    if (hits != 1) {
        std::ostringstream os;
        os << "classify_block: " << hits << " letters apply at p=" << p
           << " (not a KR column pair)";
        throw std::logic_error(os.str());
    }
    if (u) return BlockLetter::U;
    if (l == 1) return BlockLetter::LPlus;
    if (l == -1) return BlockLetter::LMinus;
    return n == 1 ? BlockLetter::NPlus : BlockLetter::NMinus;
}

PairType pair_type(const ColumnTableau& c, const ColumnTableau& t) {
    const int hc = c.head(), ht = t.head(), tc = c.tail(), tt = t.tail();
    if (hc >= ht && tc <= tt) return PairType::Fundamental;
    if (hc <= ht && tc >= tt) return PairType::AntiFundamental;
    if (hc > ht && tc > tt) return PairType::Regular;
    return PairType::AntiRegular;
}

BlockTableau block_tableau(const ColumnTableau& c, const ColumnTableau& t) {
    BlockTableau out;
    out.h = std::max(c.head(), t.head());
    out.t = std::min(c.tail(), t.tail());
    for (int p = out.h; p <= out.t + 1; ++p) out.letters.push_back(classify_block(c, t, p));
    return out;
}

std::string BlockTableau::str() const {
    std::ostringstream os;
    for (int p = h; p <= t + 1; ++p) {
        os << p << ": " << to_string(at(p));
        if (p == t + 1) os << " (boundary)";
        os << "\n";
    }
    return os.str();
}

bool block_formula_applicable(const ColumnTableau& c, const ColumnTableau& t) {
    const int h = std::max(c.head(), t.head());
    const int tt = std::min(c.tail(), t.tail());
    return h <= tt + 1;
}

int gamma_block_formula(const ColumnTableau& c, const ColumnTableau& t) {
    if (!block_formula_applicable(c, t))
        throw std::invalid_argument("gamma_block_formula: supports neither overlap nor touch");
    const int h = std::max(c.head(), t.head());
    const int tt = std::min(c.tail(), t.tail());
    int total = 0;
    for (int p = h; p <= tt; ++p) total += l_value(c, t, p);
    const PairType type = pair_type(c, t);
    if (type == PairType::Fundamental || type == PairType::AntiFundamental)
        total += n_value(c, t, tt + 1);
    else
        total += l_value(c, t, tt + 1);
    return total;
}

}  // namespace krqt

#include "krqt/ylattice.hpp"

#include <algorithm>
#include <sstream>

namespace krqt {

IntLaurent IntLaurent::monomial(int exp, long long coeff) {
    IntLaurent p;
    if (coeff != 0) p.coeffs_[exp] = coeff;
    return p;
}

bool IntLaurent::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

long long IntLaurent::coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
}

int IntLaurent::min_exp() const { return coeffs_.begin()->first; }
int IntLaurent::max_exp() const { return coeffs_.rbegin()->first; }

void IntLaurent::add_term(int exp, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, c);
    return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& other) {
    for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
    return *this;
}

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
    IntLaurent out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
    return out;
}

IntLaurent IntLaurent::shifted(int shift) const {
    IntLaurent out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[e + shift] = c;
    return out;
}

IntLaurent IntLaurent::reciprocal() const {
    IntLaurent out;
    for (const auto& [e, c] : coeffs_) out.coeffs_[-e] = c;
    return out;
}

std::string IntLaurent::str(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coeffs_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

YMonomial YMonomial::variable(int node, int spectral, int exp) {
    YMonomial m;
    if (exp != 0) m.exps_[{node, spectral}] = exp;
    return m;
}

bool YMonomial::is_dominant() const {
    return std::all_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second > 0; });
}

int YMonomial::exponent(int node, int spectral) const {
    auto it = exps_.find({node, spectral});
    return it == exps_.end() ? 0 : it->second;
}

void YMonomial::multiply_by(int node, int spectral, int exp) {
    if (exp == 0) return;
    YVar key{node, spectral};
    auto [it, inserted] = exps_.try_emplace(key, exp);
    if (!inserted) {
        it->second += exp;
        if (it->second == 0) exps_.erase(it);
    }
}

YMonomial& YMonomial::operator*=(const YMonomial& other) {
    for (const auto& [v, e] : other.exps_) multiply_by(v.node, v.spectral, e);
    return *this;
}

YMonomial YMonomial::inverse() const {
    YMonomial out;
    for (const auto& [v, e] : exps_) out.exps_[v] = -e;
    return out;
}

YMonomial YMonomial::pow(int e) const {
    YMonomial out;
    if (e == 0) return out;
    for (const auto& [v, x] : exps_) out.exps_[v] = x * e;
    return out;
}

std::optional<int> YMonomial::min_spectral() const {
    std::optional<int> out;
    for (const auto& [v, e] : exps_)
        if (!out || v.spectral < *out) out = v.spectral;
    return out;
}

std::optional<int> YMonomial::max_spectral() const {
    std::optional<int> out;
    for (const auto& [v, e] : exps_)
        if (!out || v.spectral > *out) out = v.spectral;
    return out;
}

int YMonomial::max_node() const {
    int out = 0;
    for (const auto& [v, e] : exps_) out = std::max(out, v.node);
    return out;
}

std::string YMonomial::str() const {
    if (exps_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, e] : exps_) {
        if (!first) os << "*";
        first = false;
        os << "Y[" << v.node << "," << v.spectral << "]";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::map<YVar, int> u_exponents(const YMonomial& m) { return m.exponents(); }

YMonomial a_monomial(int node, int spectral, int rank) {
    if (node < 1 || node > rank) throw std::out_of_range("a_monomial: node outside 1..r");
    YMonomial m;
    m.multiply_by(node, spectral - 1, 1);
    m.multiply_by(node, spectral + 1, 1);
    if (node - 1 >= 1) m.multiply_by(node - 1, spectral, -1);
    if (node + 1 <= rank) m.multiply_by(node + 1, spectral, -1);
    return m;
}

YMonomial apply_a_inverse(const YMonomial& base, const VExponents& v, int rank) {
    YMonomial out = base;
    for (const auto& [var, e] : v) {
        if (e == 0) continue;
        out *= a_monomial(var.node, var.spectral, rank).pow(-e);
    }
    return out;
}

// The exponent equations m = m_plus * prod A^{-v} read, per variable Y_{a,b}:
//   u_{a,b}(m_plus) - u_{a,b}(m) = v_{a,b+1} + v_{a,b-1} - v_{a-1,b} - v_{a+1,b}.
// For fixed b this determines the row v_{.,b+1} from rows b and b-1, and any
// finite solution vanishes at and below the minimal spectral support, so the
// ascending recurrence is exact.
VExponents descendant_v(const YMonomial& m, const YMonomial& m_plus, int rank) {
    if (!m_plus.is_dominant()) throw NotADescendant("descendant_v: m_plus is not dominant");
    if (m == m_plus) return {};

    std::map<YVar, int> delta = u_exponents(m_plus);
    for (const auto& [var, e] : u_exponents(m)) {
        delta[var] -= e;
        if (delta[var] == 0) delta.erase(var);
    }
    if (delta.empty()) throw NotADescendant("descendant_v: equal exponents but distinct monomials");

    int b_min = delta.begin()->first.spectral, b_max = b_min;
    for (const auto& [var, e] : delta) {
        b_min = std::min(b_min, var.spectral);
        b_max = std::max(b_max, var.spectral);
    }
    const int hard_stop = b_max + (b_max - b_min) + 2 * rank + 8;

    auto delta_at = [&](int a, int b) {
        auto it = delta.find({a, b});
        return it == delta.end() ? 0 : it->second;
    };

    VExponents v;
    std::vector<int> row_prev(rank + 2, 0), row_cur(rank + 2, 0);  // rows b-1 and b, padded
    int b = b_min;  // row_prev = row at b_min - 1, row_cur = row at b_min, both zero
    while (true) {
        std::vector<int> row_next(rank + 2, 0);
        bool nonzero = false;
        for (int a = 1; a <= rank; ++a) {
            int val = delta_at(a, b) - row_prev[a] + row_cur[a - 1] + row_cur[a + 1];
            if (val < 0)
                throw NotADescendant("descendant_v: recurrence produced a negative exponent");
            row_next[a] = val;
            nonzero = nonzero || val != 0;
        }
        if (nonzero)
            for (int a = 1; a <= rank; ++a)
                if (row_next[a] != 0) v[{a, b + 1}] = row_next[a];
        ++b;
        bool zero_tail = !nonzero && std::all_of(row_cur.begin(), row_cur.end(),
                                                 [](int x) { return x == 0; });
        if (b > b_max && zero_tail) break;
        if (b > hard_stop)
            throw NotADescendant("descendant_v: recurrence does not terminate in the support window");
        row_prev = std::move(row_cur);
        row_cur = std::move(row_next);
    }

    if (apply_a_inverse(m_plus, v, rank) != m)
        throw NotADescendant("descendant_v: reconstruction mismatch");
    return v;
}

QtCharacter QtCharacter::one() {
    QtCharacter chi{YMonomial::unit()};
    chi.add_term(YMonomial::unit(), TLaurent::one());
    return chi;
}

TLaurent QtCharacter::coefficient(const YMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? TLaurent::zero() : it->second;
}

void QtCharacter::add_term(const YMonomial& m, const TLaurent& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QtCharacter& QtCharacter::operator+=(const QtCharacter& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

QtCharacter QtCharacter::scaled(const TLaurent& tau) const {
    QtCharacter out{dominant_};
    if (tau.is_zero()) return out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * tau;
    return out;
}

std::string QtCharacter::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one()) os << m.str();
        else os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
}

}  // namespace krqt

#include "krqt/twist.hpp"

#include <algorithm>

namespace krqt {

int UTildeTable::at(int node, int spectral) const {
    if (node < 1 || node > rank_) return 0;
    if (spectral > ceiling_)
        throw std::out_of_range("UTildeTable: spectral index above the recorded ceiling");
    auto it = vals_.find({node, spectral});
    return it == vals_.end() ? 0 : it->second;
}

void UTildeTable::set(int node, int spectral, int value) {
    if (value == 0) vals_.erase({node, spectral});
    else vals_[{node, spectral}] = value;
}

// Ascending recurrence u~_{i,j+1} = u_{i,j} - u~_{i,j-1} + u~_{i-1,j} + u~_{i+1,j},
// seeded with zero rows at and below the minimal spectral support of u.
UTildeTable tilde_u(const YMonomial& m, int rank, int ceiling) {
    UTildeTable table(rank, ceiling);
    auto mins = m.min_spectral();
    if (!mins) return table;
    if (m.max_node() > rank)
        throw std::invalid_argument("tilde_u: monomial has a node outside 1..r");

    const auto u = u_exponents(m);
    auto u_at = [&](int a, int b) {
        auto it = u.find({a, b});
        return it == u.end() ? 0 : it->second;
    };

    std::vector<int> row_prev(rank + 2, 0), row_cur(rank + 2, 0);  // rows j-1 and j
    for (int j = *mins; j < ceiling; ++j) {
        std::vector<int> row_next(rank + 2, 0);
        for (int a = 1; a <= rank; ++a) {
            row_next[a] = u_at(a, j) - row_prev[a] + row_cur[a - 1] + row_cur[a + 1];
            if (row_next[a] != 0) table.set(a, j + 1, row_next[a]);
        }
        row_prev = std::move(row_cur);
        row_cur = std::move(row_next);
    }
    return table;
}

IntLaurent s_number(int k) {
    if (k < 0) throw std::invalid_argument("s_number: k must be >= 0");
    IntLaurent out;
    for (int e = -k + 1; e <= k - 1; e += 2) out.add_term(e, 1);
    return out;
}

VecSeries::VecSeries(int rank, int lo, int hi) : rank_(rank), lo_(lo), hi_(hi) {
    if (rank < 1 || hi < lo) throw std::invalid_argument("VecSeries: bad shape");
    comp_.assign(rank_, std::vector<long long>(static_cast<std::size_t>(hi_ - lo_ + 1), 0));
}

VecSeries VecSeries::from_polynomials(const std::vector<IntLaurent>& comps) {
    int lo = 0, hi = 0;
    bool any = false;
    for (const auto& p : comps) {
        if (p.is_zero()) continue;
        lo = any ? std::min(lo, p.min_exp()) : p.min_exp();
        hi = any ? std::max(hi, p.max_exp()) : p.max_exp();
        any = true;
    }
    VecSeries out(static_cast<int>(comps.size()), lo, hi);
    for (int i = 0; i < out.rank_; ++i)
        for (const auto& [e, c] : comps[static_cast<std::size_t>(i)].coeffs())
            out.set_coeff(i + 1, e, c);
    return out;
}

VecSeries VecSeries::from_monomial_u(const YMonomial& m, int rank) {
    std::vector<IntLaurent> comps(static_cast<std::size_t>(rank));
    for (const auto& [var, e] : m.exponents()) {
        if (var.node < 1 || var.node > rank)
            throw std::invalid_argument("from_monomial_u: node outside 1..r");
        comps[static_cast<std::size_t>(var.node - 1)].add_term(var.spectral, e);
    }
    return from_polynomials(comps);
}

VecSeries VecSeries::basis(int rank, int node, const IntLaurent& poly) {
    std::vector<IntLaurent> comps(static_cast<std::size_t>(rank));
    if (node >= 1 && node <= rank) comps[static_cast<std::size_t>(node - 1)] = poly;
    return from_polynomials(comps);
}

long long VecSeries::coeff(int node, int exp) const {
    if (node < 1 || node > rank_) throw std::invalid_argument("VecSeries::coeff: bad node");
    if (exp < lo_) {
        if (!exact_below_) throw InsufficientWindow("VecSeries: coefficient below window");
        return 0;
    }
    if (exp > hi_) {
        if (!exact_above_) throw InsufficientWindow("VecSeries: coefficient above window");
        return 0;
    }
    return comp_[static_cast<std::size_t>(node - 1)][static_cast<std::size_t>(exp - lo_)];
}

void VecSeries::set_coeff(int node, int exp, long long value) {
    comp_.at(static_cast<std::size_t>(node - 1)).at(static_cast<std::size_t>(exp - lo_)) = value;
}

VecSeries VecSeries::shifted(int s_power) const {
    VecSeries out(rank_, lo_ + s_power, hi_ + s_power);
    out.exact_below_ = exact_below_;
    out.exact_above_ = exact_above_;
    out.comp_ = comp_;
    return out;
}

namespace {

// The sum is known exactly where both operands are known.
VecSeries combine(const VecSeries& a, const VecSeries& b, long long sb) {
    if (a.rank() != b.rank()) throw std::invalid_argument("VecSeries: rank mismatch");
    const bool below = a.exact_below() && b.exact_below();
    const bool above = a.exact_above() && b.exact_above();
    int lo = std::min(a.lo(), b.lo());
    int hi = std::max(a.hi(), b.hi());
    if (!below) {
        lo = std::max(a.exact_below() ? lo : a.lo(), b.exact_below() ? lo : b.lo());
    }
    if (!above) {
        hi = std::min(a.exact_above() ? hi : a.hi(), b.exact_above() ? hi : b.hi());
    }
    if (hi < lo) throw InsufficientWindow("VecSeries: windows do not intersect");
    VecSeries out(a.rank(), lo, hi);
    out.set_exactness(below, above);
    for (int i = 1; i <= a.rank(); ++i)
        for (int e = lo; e <= hi; ++e) out.set_coeff(i, e, a.coeff(i, e) + sb * b.coeff(i, e));
    return out;
}

}  // namespace

VecSeries operator+(const VecSeries& a, const VecSeries& b) { return combine(a, b, 1); }
VecSeries operator-(const VecSeries& a, const VecSeries& b) { return combine(a, b, -1); }

SeriesOperator::SeriesOperator(int rank, int lo, std::vector<Mat> mats, bool exact)
    : rank_(rank), lo_(lo), exact_(exact), mats_(std::move(mats)) {
    if (mats_.empty()) throw std::invalid_argument("SeriesOperator: no coefficients");
}

const SeriesOperator::Mat& SeriesOperator::mat(int exp) const {
    return mats_.at(static_cast<std::size_t>(exp - lo_));
}

SeriesOperator::Mat cartan_minus_two(int rank) {
    SeriesOperator::Mat a(static_cast<std::size_t>(rank),
                          std::vector<long long>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i + 1 < rank; ++i) {
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = -1;
        a[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = -1;
    }
    return a;
}

namespace {

SeriesOperator::Mat identity_mat(int rank) {
    SeriesOperator::Mat m(static_cast<std::size_t>(rank),
                          std::vector<long long>(static_cast<std::size_t>(rank), 0));
    for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    return m;
}

SeriesOperator::Mat mat_mul(const SeriesOperator::Mat& a, const SeriesOperator::Mat& b) {
    const std::size_t n = a.size();
    SeriesOperator::Mat out(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

SeriesOperator::Mat mat_add(SeriesOperator::Mat a, const SeriesOperator::Mat& b, long long s) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) a[i][j] += s * b[i][j];
    return a;
}

}  // namespace

SeriesOperator operator_K(int rank) {
    return SeriesOperator(rank, -1, {identity_mat(rank), cartan_minus_two(rank), identity_mat(rank)},
                          /*exact=*/true);
}

SeriesOperator operator_D(int rank, int depth) {
    if (depth < 1) throw std::invalid_argument("operator_D: depth must be >= 1");
    // (1 + A s + s^2)^{-1} = sum G_m s^m with G_0 = I, G_1 = -A G_0,
    // G_m = -A G_{m-1} - G_{m-2}; then D_m = G_{m-1} at exponent m >= 1.
    const auto a = cartan_minus_two(rank);
    std::vector<SeriesOperator::Mat> g;
    g.push_back(identity_mat(rank));
    for (int m = 1; m < depth; ++m) {
        SeriesOperator::Mat next = mat_mul(a, g.back());
        for (auto& row : next)
            for (auto& x : row) x = -x;
        if (m >= 2) next = mat_add(std::move(next), g[static_cast<std::size_t>(m - 2)], -1);
        g.push_back(std::move(next));
    }
    return SeriesOperator(rank, 1, std::move(g), /*exact=*/false);
}

VecSeries SeriesOperator::apply(const VecSeries& v) const {
    if (v.rank() != rank_) throw std::invalid_argument("SeriesOperator::apply: rank mismatch");
    if (!v.exact_below() || !v.exact_above())
        throw InsufficientWindow("SeriesOperator::apply: operand must be an exact polynomial");
    const int out_lo = v.lo() + lo_;
    // A truncated operator determines the result only up to v.lo() + hi().
    const int out_hi = exact_ ? v.hi() + hi() : v.lo() + hi();
    VecSeries out(rank_, out_lo, std::max(out_lo, out_hi));
    out.set_exactness(true, exact_);
    for (int n = out_lo; n <= out.hi(); ++n) {
        for (int d = lo_; d <= hi(); ++d) {
            const int src = n - d;
            if (src < v.lo() || src > v.hi()) continue;
            const Mat& md = mat(d);
            for (int i = 1; i <= rank_; ++i) {
                long long acc = out.coeff(i, n);
                for (int jx = 1; jx <= rank_; ++jx)
                    acc += md[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jx - 1)] *
                           v.coeff(jx, src);
                out.set_coeff(i, n, acc);
            }
        }
    }
    return out;
}

SeriesOperator SeriesOperator::compose(const SeriesOperator& other, int lo, int hi) const {
    if (rank_ != other.rank_) throw std::invalid_argument("compose: rank mismatch");
    std::vector<Mat> mats;
    for (int e = lo; e <= hi; ++e) {
        Mat acc(static_cast<std::size_t>(rank_),
                std::vector<long long>(static_cast<std::size_t>(rank_), 0));
        for (int d = lo_; d <= this->hi(); ++d) {
            const int od = e - d;
            if (od < other.lo_ || od > other.hi()) continue;
            acc = mat_add(std::move(acc), mat_mul(mat(d), other.mat(od)), 1);
        }
        mats.push_back(std::move(acc));
    }
    return SeriesOperator(rank_, lo, std::move(mats), false);
}

VecSeries u_series(const KrLabel& label) {
    if (!label.valid()) throw std::invalid_argument("u_series: invalid label");
    if (label.width == 0) {
        VecSeries zero(label.rank, 0, 0);
        return zero;
    }
    const int par = ((label.node + label.width + 1) % 2 + 2) % 2;
    return VecSeries::basis(label.rank, label.node, s_number(label.width).shifted(-1 + par));
}

long long inner(const VecSeries& a, const VecSeries& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("inner: rank mismatch");
    // [f(s^-1) g(s)]_0 = sum_n f_n g_n; every n with a potentially nonzero
    // product must be readable on both sides.
    int lo, hi;
    if (a.exact_below() && a.exact_above()) {
        lo = a.lo(); hi = a.hi();
        if (!(b.exact_below() && b.exact_above())) {
            if (lo < b.lo() && !b.exact_below())
                throw InsufficientWindow("inner: left support extends below right window");
            if (hi > b.hi() && !b.exact_above())
                throw InsufficientWindow("inner: left support extends above right window");
        }
    } else if (b.exact_below() && b.exact_above()) {
        lo = b.lo(); hi = b.hi();
        if (lo < a.lo() && !a.exact_below())
            throw InsufficientWindow("inner: right support extends below left window");
        if (hi > a.hi() && !a.exact_above())
            throw InsufficientWindow("inner: right support extends above left window");
    } else {
        throw InsufficientWindow("inner: neither operand has certified support");
    }
    long long acc = 0;
    for (int i = 1; i <= a.rank(); ++i)
        for (int n = lo; n <= hi; ++n) acc += a.coeff(i, n) * b.coeff(i, n);
    return acc;
}

int epsilon(const YMonomial& m1_plus, const YMonomial& m2_plus, int rank) {
    if (!m1_plus.is_dominant() || !m2_plus.is_dominant())
        throw std::invalid_argument("epsilon: operands must be dominant monomials");
    if (m1_plus.is_unit() || m2_plus.is_unit()) return 0;

    const int ceiling = std::max(*m1_plus.max_spectral(), *m2_plus.max_spectral()) + 1;
    const UTildeTable t1 = tilde_u(m1_plus, rank, ceiling);
    const UTildeTable t2 = tilde_u(m2_plus, rank, ceiling);

    long long acc = 0;
    for (const auto& [var, e] : m1_plus.exponents()) acc -= static_cast<long long>(e) * t2.at(var.node, var.spectral - 1);
    for (const auto& [var, e] : m2_plus.exponents()) acc += static_cast<long long>(e) * t1.at(var.node, var.spectral - 1);
    return static_cast<int>(acc);
}

// epsilon through the series calculus: with u~ = D u, the definition reads
//   epsilon(p,p') = (1(x)s) D u(p) . u(p') - (1(x)s) D u(p') . u(p).
// (The one-sided (1(x)s - 1(x)s^-1) D u(p) . u(p') rewrite is not
// antisymmetric once D is an infinite series; it already fails on p = p'.)
int epsilon_series(const YMonomial& m1_plus, const YMonomial& m2_plus, int rank) {
    if (!m1_plus.is_dominant() || !m2_plus.is_dominant())
        throw std::invalid_argument("epsilon_series: operands must be dominant monomials");
    if (m1_plus.is_unit() || m2_plus.is_unit()) return 0;

    const VecSeries u1 = VecSeries::from_monomial_u(m1_plus, rank);
    const VecSeries u2 = VecSeries::from_monomial_u(m2_plus, rank);
    for (int depth = 8; depth <= 1 << 16; depth *= 2) {
        try {
            const SeriesOperator d = operator_D(rank, depth);
            const long long fwd = inner(d.apply(u1).shifted(1), u2);
            const long long rev = inner(d.apply(u2).shifted(1), u1);
            return static_cast<int>(fwd - rev);
        } catch (const InsufficientWindow&) {
            continue;  // widen and retry
        }
    }
    throw InsufficientWindow("epsilon_series: window cap exceeded");
}

int d_value(const YMonomial& m1, const YMonomial& m1_plus, const YMonomial& m2,
            const YMonomial& m2_plus, int rank) {
    const VExponents v1 = descendant_v(m1, m1_plus, rank);
    const VExponents v2 = descendant_v(m2, m2_plus, rank);
    long long acc = 0;
    for (const auto& [var, e] : v1)
        acc += static_cast<long long>(e) * m2.exponent(var.node, var.spectral - 1);
    for (const auto& [var, e] : v2)
        acc += static_cast<long long>(e) * m1_plus.exponent(var.node, var.spectral + 1);
    return static_cast<int>(acc);
}

int gamma(const YMonomial& m1, const YMonomial& m1_plus, const YMonomial& m2,
          const YMonomial& m2_plus, int rank) {
    return d_value(m1, m1_plus, m2, m2_plus, rank) - d_value(m2, m2_plus, m1, m1_plus, rank);
}

QtCharacter twisted_mul(const QtCharacter& chi1, const QtCharacter& chi2, TwistMode mode,
                        int rank) {
    const int eps = mode == TwistMode::Star ? epsilon(chi1.dominant(), chi2.dominant(), rank) : 0;

    // v-exponents are per monomial, relative to the factor's own dominant.
    std::vector<std::pair<const YMonomial*, VExponents>> left, right;
    left.reserve(chi1.terms().size());
    right.reserve(chi2.terms().size());
    for (const auto& [m, c] : chi1.terms())
        left.emplace_back(&m, descendant_v(m, chi1.dominant(), rank));
    for (const auto& [m, c] : chi2.terms())
        right.emplace_back(&m, descendant_v(m, chi2.dominant(), rank));

    auto d_of = [&](const YMonomial& mp1, const VExponents& v1, const YMonomial& m2,
                    const VExponents& v2) {
        long long acc = 0;
        for (const auto& [var, e] : v1)
            acc += static_cast<long long>(e) * m2.exponent(var.node, var.spectral - 1);
        for (const auto& [var, e] : v2)
            acc += static_cast<long long>(e) * mp1.exponent(var.node, var.spectral + 1);
        return acc;
    };

    QtCharacter out{chi1.dominant() * chi2.dominant()};
    for (const auto& [m1, v1] : left) {
        const TLaurent& c1 = chi1.terms().at(*m1);
        for (const auto& [m2, v2] : right) {
            const TLaurent& c2 = chi2.terms().at(*m2);
            const long long g = d_of(chi1.dominant(), v1, *m2, v2) -
                                d_of(chi2.dominant(), v2, *m1, v1);
            out.add_term(*m1 * *m2, (c1 * c2).shifted(static_cast<int>(g) + eps));
        }
    }
    return out;
}

std::optional<int> t_commutation_exponent(const QtCharacter& chi1, const QtCharacter& chi2,
                                          int rank) {
    const QtCharacter p = twisted_mul(chi1, chi2, TwistMode::Star, rank);
    const QtCharacter q = twisted_mul(chi2, chi1, TwistMode::Star, rank);
    if (p.terms().size() != q.terms().size()) return std::nullopt;
    if (p.is_zero()) return 0;

    const auto& [m0, pc0] = *p.terms().begin();
    const TLaurent qc0 = q.coefficient(m0);
    if (qc0.is_zero()) return std::nullopt;
    const int alpha = pc0.min_exp() - qc0.min_exp();

    for (const auto& [m, pc] : p.terms())
        if (pc != q.coefficient(m).shifted(alpha)) return std::nullopt;
    return alpha;
}

}  // namespace krqt

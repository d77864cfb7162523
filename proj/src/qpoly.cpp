#include "affchar/qpoly.hpp"

#include <algorithm>
#include <vector>

namespace affchar {

QLaurent QLaurent::monomial(int exponent, Int coeff) {
    QLaurent p;
    if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
    return p;
}

bool QLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int QLaurent::min_exp() const {
    AFFCHAR_CHECK(!terms_.empty(), "min_exp of zero polynomial");
    return terms_.begin()->first;
}

int QLaurent::max_exp() const {
    AFFCHAR_CHECK(!terms_.empty(), "max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int QLaurent::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

void QLaurent::add_term(int exponent, const Int& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

QLaurent QLaurent::shifted(int by) const {
    QLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
}

Int QLaurent::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool QLaurent::has_nonnegative_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second >= 0; });
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
    QLaurent out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

QLaurent QLaurent::operator-(const QLaurent& o) const { return *this + (-o); }

QLaurent QLaurent::operator-() const {
    QLaurent out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
    QLaurent out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

QLaurent q_pochhammer(int m) {
    if (m < 0) throw usage_error("q_pochhammer requires m >= 0");
    QLaurent p = QLaurent::one();
    for (int i = 1; i <= m; ++i) {
        QLaurent f = QLaurent::one();
        f.add_term(i, -1);
        p = p * f;
    }
    return p;
}

QLaurent q_binomial(int n, int m) {
    if (n < 0 || m < 0) return QLaurent{};  // zero by convention
    // B(n,m) = B(n,m-1) + q^m B(n-1,m); row-by-row in n keeps one row live.
    std::vector<QLaurent> row(static_cast<std::size_t>(m) + 1, QLaurent::one());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            row[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j) - 1] + row[static_cast<std::size_t>(j)].shifted(j);
    return row[static_cast<std::size_t>(m)];
}

QLaurent substitute_q_inverse(const QLaurent& p) {
    QLaurent out;
    for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
    return out;
}

Int TruncatedSeries::coeff(int exponent) const {
    AFFCHAR_CHECK(exponent <= hi_, "coefficient outside the exact window");
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Int(0) : it->second;
}

void TruncatedSeries::add_term(int exponent, const Int& coeff) {
    if (coeff == 0 || exponent > hi_) return;
    AFFCHAR_CHECK(exponent >= lo_, "term below the support bound");
    auto [it, inserted] = terms_.emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries out(std::min(lo_, o.lo_), std::min(hi_, o.hi_));
    for (const auto& [e, c] : terms_)
        if (e <= out.hi_) out.add_term(e, c);
    for (const auto& [e, c] : o.terms_)
        if (e <= out.hi_) out.add_term(e, c);
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(lo_ + o.lo_, std::min(lo_ + o.hi_, hi_ + o.lo_));
    for (const auto& [e1, c1] : terms_) {
        if (e1 + o.lo_ > out.hi_) break;
        for (const auto& [e2, c2] : o.terms_) {
            if (e1 + e2 > out.hi_) break;
            out.add_term(e1 + e2, c1 * c2);
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator*(const QLaurent& p) const {
    if (p.is_zero()) {
        // zero is exact everywhere; keep this window
        return TruncatedSeries(lo_, hi_);
    }
    TruncatedSeries out(lo_ + p.min_exp(), hi_ + p.min_exp());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : p.terms()) out.add_term(e1 + e2, c1 * c2);
    return out;
}

TruncatedSeries TruncatedSeries::shifted(int by) const {
    TruncatedSeries out(lo_ + by, hi_ + by);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
    return out;
}

TruncatedSeries TruncatedSeries::truncated(int hi) const {
    TruncatedSeries out(lo_, std::min(hi_, hi));
    for (const auto& [e, c] : terms_) {
        if (e > out.hi_) break;
        out.terms_.emplace(e, c);
    }
    return out;
}

namespace {
TruncatedSeries bounded_partition_series(int max_part, int max_exp) {
    std::vector<Int> c(static_cast<std::size_t>(max_exp) + 1, 0);
    c[0] = 1;
    const int top = max_part < 0 ? max_exp : std::min(max_part, max_exp);
    for (int part = 1; part <= top; ++part)
        for (int d = part; d <= max_exp; ++d)
            c[static_cast<std::size_t>(d)] += c[static_cast<std::size_t>(d - part)];
    TruncatedSeries out(0, max_exp);
    for (int d = 0; d <= max_exp; ++d) out.add_term(d, c[static_cast<std::size_t>(d)]);
    return out;
}
}  // namespace

TruncatedSeries inv_pochhammer_series(int m, int max_exp) {
    if (m < 0) throw usage_error("inv_pochhammer_series requires m >= 0");
    if (max_exp < 0) throw usage_error("inv_pochhammer_series requires max_exp >= 0");
    return bounded_partition_series(m, max_exp);
}

TruncatedSeries inv_pochhammer_series_inf(int max_exp) {
    if (max_exp < 0) throw usage_error("inv_pochhammer_series requires max_exp >= 0");
    return bounded_partition_series(-1, max_exp);
}

}  // namespace affchar

#include "affchar/char_engine.hpp"

#include <algorithm>
#include <sstream>

#include "affchar/fermionic.hpp"
#include "affchar/oracles.hpp"

namespace affchar {

Decomposition decompose_fusion(const DynkinLabel& n, int rank) {
    if (n.rank() != rank) throw usage_error("label length must equal rank");
    if (!n.dominant()) throw usage_error("fusion weight must be dominant");

    Decomposition out;
    out.source = n;
    for (const auto& l : dominant_weights(rank, threshold_level(n), congruence_class(n, rank))) {
        const QLaurent k = kostka_poly(l, n, rank);
        if (k.is_zero()) continue;
        if (l == n) AFFCHAR_CHECK(k.is_one(), "diagonal Kostka coefficient is not 1");
        QLaurent c = substitute_q_inverse(k);
        AFFCHAR_CHECK(c.has_nonnegative_coefficients() && c.max_exp() <= 0,
                      "decomposition coefficient is not a polynomial in 1/q");
        out.terms.emplace_back(l, std::move(c));
    }
    return out;
}

namespace {

// Column of K^-1 for the target weight, with the width J of the 1/q shifts.
// Each summand also carries the degree of its own K column, which bounds how
// far below q^0 the corresponding ch F^inf may reach.
struct InverseColumn {
    std::vector<std::pair<DynkinLabel, QLaurent>> coeffs;  // (n, K^-1_{n,l} in q)
    std::vector<int> depth_bound;                          // max deg of K column n
    int shift = 0;                                         // max q-degree over the column
};

InverseColumn inverse_column(const DynkinLabel& l, int rank) {
    const KostkaMatrix k =
        kostka_matrix(rank, threshold_level(l), congruence_class(l, rank));
    const KostkaMatrix ki = invert(k);
    const int col = ki.index_of(l);
    AFFCHAR_CHECK(col >= 0, "weight missing from its own basis");
    InverseColumn out;
    for (int row = 0; row < ki.size(); ++row) {
        const QLaurent& e = ki.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (e.is_zero()) continue;
        out.shift = std::max(out.shift, e.max_exp());
        out.coeffs.emplace_back(ki.basis[static_cast<std::size_t>(row)], e);
        int bound = 0;
        for (int r2 = 0; r2 < k.size(); ++r2) {
            const QLaurent& ke = k.entries[static_cast<std::size_t>(r2)][static_cast<std::size_t>(row)];
            if (!ke.is_zero()) bound = std::max(bound, ke.max_exp());
        }
        out.depth_bound.push_back(bound);
    }
    return out;
}

CharSeries combine(const DynkinLabel& l, int level, int max_exp, bool translated) {
    if (!l.dominant()) throw usage_error("highest weight must be dominant");
    if (threshold_level(l) > level) throw usage_error("weight is not integrable at this level");
    if (max_exp < 0) throw usage_error("max_exp must be >= 0");

    const InverseColumn column = inverse_column(l, l.rank());
    const int wide = max_exp + column.shift;

    CharSeries sum(l.rank(), level, 0, wide);
    for (std::size_t t = 0; t < column.coeffs.size(); ++t) {
        const auto& [n, coeff] = column.coeffs[t];
        const CharSeries f = translated ? ch_F_inf(n, level, wide) : ch_F(n, level, wide);
        AFFCHAR_CHECK(f.lo() >= -column.depth_bound[t],
                      "fermionic window dips below its Kostka column degree");
        const CharSeries term = f.scaled(substitute_q_inverse(coeff));
        sum = t == 0 ? term : sum + term;
    }
    AFFCHAR_CHECK(sum.hi() >= max_exp, "window bookkeeping lost requested degrees");

    // Cancellation: nothing may survive below q^0.
    AFFCHAR_CHECK(sum.empty() || sum.min_degree() >= 0,
                  "negative-degree terms failed to cancel");
    CharSeries out = sum.truncated(max_exp).with_floor(0);
    AFFCHAR_CHECK(out.all_nonnegative(), "character multiplicity went negative");
    return out;
}

}  // namespace

CharSeries ch_H(const DynkinLabel& l, int level, int max_exp) {
    return combine(l, level, max_exp, true);
}

CharSeries ch_W(const DynkinLabel& l, int level, int max_exp) {
    return combine(l, level, max_exp, false);
}

VerifyReport verify_decomposition(const DynkinLabel& n, int level, int max_exp) {
    if (!n.dominant()) throw usage_error("fusion weight must be dominant");
    if (threshold_level(n) > level) throw usage_error("fusion weight exceeds the level");
    if (max_exp < 0) throw usage_error("max_exp must be >= 0");
    const int rank = n.rank();

    const KostkaMatrix k = kostka_matrix(rank, threshold_level(n), congruence_class(n, rank));
    const int col = k.index_of(n);
    AFFCHAR_CHECK(col >= 0, "weight missing from its own basis");

    int shift = 0;
    for (int row = 0; row < k.size(); ++row) {
        const QLaurent& e = k.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (!e.is_zero()) shift = std::max(shift, e.max_exp());
    }

    const CharSeries lhs = ch_F_inf(n, level, max_exp);

    CharSeries rhs(rank, level, -shift, max_exp);
    for (int row = 0; row < k.size(); ++row) {
        const QLaurent& e = k.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (e.is_zero()) continue;
        const CharSeries oracle =
            freudenthal_affine(k.basis[static_cast<std::size_t>(row)], level, max_exp + shift)
                .to_char_series();
        rhs = rhs + oracle.scaled(substitute_q_inverse(e));
    }

    VerifyReport report;
    report.equal = true;
    for (int d = std::min(lhs.empty() ? 0 : lhs.min_degree(), rhs.empty() ? 0 : rhs.min_degree());
         d <= max_exp && report.equal; ++d) {
        const auto& a = lhs.slice(d);
        const auto& b = rhs.slice(d);
        if (a == b) continue;
        report.equal = false;
        for (const auto& [w, m] : a) {
            auto it = b.find(w);
            if (it == b.end() || it->second != m) {
                std::ostringstream os;
                os << "degree " << d << ": fermionic " << m.get_str() << " vs oracle "
                   << (it == b.end() ? std::string("0") : it->second.get_str());
                report.detail = os.str();
                break;
            }
        }
        if (report.detail.empty()) report.detail = "oracle has extra weights at degree " + std::to_string(d);
    }
    return report;
}

}  // namespace affchar

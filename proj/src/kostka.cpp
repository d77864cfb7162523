#include "affchar/kostka.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace affchar {

namespace {

// All (m_1..m_K) with sum a*m_a = total and parts <= K.
std::vector<std::vector<int>> bounded_partitions(int total, int max_part) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(max_part), 0);
    const auto rec = [&](auto&& self, int rem, int part) -> void {
        if (part > max_part) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int cnt = 0; cnt * part <= rem; ++cnt) {
            cur[static_cast<std::size_t>(part) - 1] = cnt;
            self(self, rem - cnt * part, part + 1);
        }
        cur[static_cast<std::size_t>(part) - 1] = 0;
    };
    rec(rec, total, 1);
    return out;
}

class BinomialCache {
public:
    const QLaurent& get(int n, int m) {
        const auto key = std::make_pair(n, m);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(key, q_binomial(n, m)).first->second;
    }

private:
    std::map<std::pair<int, int>, QLaurent> cache_;
};

}  // namespace

QLaurent kostka_poly_with_parts(const DynkinLabel& l, const DynkinLabel& n, int rank,
                                int parts_bound) {
    if (l.rank() != rank || n.rank() != rank) throw usage_error("label length must equal rank");
    if (!l.dominant() || !n.dominant()) throw usage_error("Kostka labels must be dominant");
    if (parts_bound < threshold_level(n))
        throw usage_error("row-width bound below the threshold level drops terms");

    const CartanData cd = CartanData::make(rank);
    std::vector<int> m(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) {
        Rat v = 0;
        for (int j = 0; j < rank; ++j) v += cd.inv[i][j] * Rat(n[j] - l[j]);
        v.canonicalize();
        if (v.get_den() != 1 || v < 0) return QLaurent{};
        m[static_cast<std::size_t>(i)] = static_cast<int>(v.get_num().get_si());
    }

    const int width = parts_bound;
    if (width == 0) {
        const bool all_zero = std::all_of(m.begin(), m.end(), [](int v) { return v == 0; });
        return all_zero ? QLaurent::one() : QLaurent{};
    }
    const AMatrix amat{width};

    std::vector<std::vector<std::vector<int>>> per_color;
    per_color.reserve(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i)
        per_color.push_back(bounded_partitions(m[static_cast<std::size_t>(i)], width));

    BinomialCache binom;
    QLaurent total;
    std::vector<std::size_t> pick(static_cast<std::size_t>(rank), 0);
    for (;;) {
        // quadratic exponent (1/2) m (C x A) m
        long long quad = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) {
                if (cd.cartan[i][j] == 0) continue;
                const auto& mi = per_color[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
                const auto& mj = per_color[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]];
                for (int a = 0; a < width; ++a) {
                    if (mi[static_cast<std::size_t>(a)] == 0) continue;
                    for (int b = 0; b < width; ++b)
                        quad += static_cast<long long>(mi[static_cast<std::size_t>(a)]) *
                                cd.cartan[i][j] * amat.at(a + 1, b + 1) *
                                mj[static_cast<std::size_t>(b)];
                }
            }
        AFFCHAR_CHECK(quad % 2 == 0, "Kostka exponent is not an integer");

        QLaurent term = QLaurent::monomial(static_cast<int>(quad / 2), 1);
        for (int i = 0; i < rank && !term.is_zero(); ++i) {
            const auto& mi = per_color[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
            for (int a = 0; a < width && !term.is_zero(); ++a) {
                long long s = 0;
                for (int j = 0; j < rank; ++j) {
                    if (cd.cartan[i][j] == 0) continue;
                    const auto& mj = per_color[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]];
                    for (int b = 0; b < width; ++b)
                        s += static_cast<long long>(cd.cartan[i][j]) * amat.at(a + 1, b + 1) *
                             mj[static_cast<std::size_t>(b)];
                }
                const int top = std::min(a + 1, n[i]) - static_cast<int>(s);
                term = term * binom.get(top, mi[static_cast<std::size_t>(a)]);
            }
        }
        total = total + term;

        // odometer over the per-color partition choices
        int pos = 0;
        while (pos < rank) {
            if (++pick[static_cast<std::size_t>(pos)] <
                per_color[static_cast<std::size_t>(pos)].size())
                break;
            pick[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == rank) break;
    }

    AFFCHAR_CHECK(total.has_nonnegative_coefficients(), "Kostka polynomial went negative");
    return total;
}

QLaurent kostka_poly(const DynkinLabel& l, const DynkinLabel& n, int rank) {
    int level = 0;
    for (int i = 0; i < n.rank(); ++i) level += n[i];
    return kostka_poly_with_parts(l, n, rank, level);
}

Int lr_coefficient(const DynkinLabel& l, const DynkinLabel& n, int rank) {
    return kostka_poly(l, n, rank).eval_at_one();
}

int KostkaMatrix::index_of(const DynkinLabel& w) const {
    for (int i = 0; i < size(); ++i)
        if (basis[static_cast<std::size_t>(i)] == w) return i;
    return -1;
}

KostkaMatrix kostka_matrix(int rank, int max_threshold, int congruence) {
    KostkaMatrix k;
    k.basis = dominant_weights(rank, max_threshold, congruence);
    const int n = k.size();
    k.entries.assign(static_cast<std::size_t>(n), std::vector<QLaurent>(static_cast<std::size_t>(n)));
    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            QLaurent e = kostka_poly(k.basis[static_cast<std::size_t>(row)],
                                     k.basis[static_cast<std::size_t>(col)], rank);
            if (row == col)
                AFFCHAR_CHECK(e.is_one(), "Kostka diagonal is not 1");
            else if (row > col)
                AFFCHAR_CHECK(e.is_zero(), "Kostka matrix is not upper triangular");
            k.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = std::move(e);
        }
    return k;
}

KostkaMatrix invert(const KostkaMatrix& k) {
    const int n = k.size();
    for (int i = 0; i < n; ++i)
        if (!k.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].is_one())
            throw usage_error("invert requires a unit diagonal");

    KostkaMatrix inv;
    inv.basis = k.basis;
    inv.entries.assign(static_cast<std::size_t>(n), std::vector<QLaurent>(static_cast<std::size_t>(n)));
    for (int col = 0; col < n; ++col) {
        inv.entries[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)] = QLaurent::one();
        for (int row = col - 1; row >= 0; --row) {
            QLaurent acc;
            for (int t = row + 1; t <= col; ++t)
                acc = acc + k.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(t)] *
                                inv.entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(col)];
            inv.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = -acc;
        }
    }

    for (int row = 0; row < n; ++row)
        for (int col = 0; col < n; ++col) {
            QLaurent acc;
            for (int t = 0; t < n; ++t)
                acc = acc + k.entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(t)] *
                                inv.entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(col)];
            AFFCHAR_CHECK(row == col ? acc.is_one() : acc.is_zero(), "K * K^-1 != I");
        }
    return inv;
}

}  // namespace affchar

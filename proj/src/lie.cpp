#include "affchar/lie.hpp"

#include <algorithm>
#include <set>

namespace affchar {

std::vector<std::vector<int>> cartan_matrix(int rank) {
    if (rank < 1) throw usage_error("rank must be >= 1");
    std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) {
        c[i][i] = 2;
        if (i + 1 < rank) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    return c;
}

std::vector<std::vector<Rat>> inverse_cartan(int rank) {
    if (rank < 1) throw usage_error("rank must be >= 1");
    std::vector<std::vector<Rat>> m(rank, std::vector<Rat>(rank));
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            Rat frac(i * j, rank + 1);
            frac.canonicalize();
            m[i - 1][j - 1] = Rat(std::min(i, j)) - frac;
        }
    return m;
}

CartanData CartanData::make(int rank) {
    CartanData cd;
    cd.rank = rank;
    cd.cartan = cartan_matrix(rank);
    cd.inv = inverse_cartan(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rat s = 0;
            for (int t = 0; t < rank; ++t) s += Rat(cd.cartan[i][t]) * cd.inv[t][j];
            AFFCHAR_CHECK(s == Rat(i == j ? 1 : 0), "Cartan inverse is not exact");
        }
    return cd;
}

int threshold_level(const DynkinLabel& l) {
    if (!l.dominant()) throw usage_error("threshold level requires a dominant weight");
    int s = 0;
    for (int e : l.entries()) s += e;
    return s;
}

int congruence_class(const DynkinLabel& l, int rank) {
    long long s = 0;
    for (int i = 0; i < l.rank(); ++i) s += static_cast<long long>(i + 1) * l[i];
    long long m = rank + 1;
    return static_cast<int>(((s % m) + m) % m);
}

AffineWeight weyl_translate(const AffineWeight& w, const std::vector<int>& shifts) {
    const int r = w.finite.rank();
    AFFCHAR_CHECK(static_cast<int>(shifts.size()) == r, "translation vector has wrong length");
    const auto c = cartan_matrix(r);
    std::vector<int> finite(w.finite.entries());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) finite[i] += w.level * shifts[j] * c[j][i];

    long long quad = 0;  // N^T C N, always even for A_r
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) quad += static_cast<long long>(shifts[i]) * c[i][j] * shifts[j];
    AFFCHAR_CHECK(quad % 2 == 0, "degree shift is not an integer");

    long long lin = 0;
    for (int i = 0; i < r; ++i) lin += static_cast<long long>(shifts[i]) * w.finite[i];

    AffineWeight out;
    out.finite = DynkinLabel(std::move(finite));
    out.level = w.level;
    out.degree = static_cast<int>(w.degree - lin - w.level * (quad / 2));
    return out;
}

namespace {
void labels_with_sum_at_most(int rank, int budget, std::vector<int>& cur,
                             std::vector<DynkinLabel>& out) {
    if (static_cast<int>(cur.size()) == rank) {
        out.emplace_back(cur);
        return;
    }
    for (int v = 0; v <= budget; ++v) {
        cur.push_back(v);
        labels_with_sum_at_most(rank, budget - v, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<DynkinLabel> dominant_weights(int rank, int max_threshold, int congruence) {
    if (rank < 1) throw usage_error("rank must be >= 1");
    if (max_threshold < 0) throw usage_error("max threshold must be >= 0");
    std::vector<DynkinLabel> all;
    std::vector<int> cur;
    labels_with_sum_at_most(rank, max_threshold, cur, all);
    std::vector<DynkinLabel> picked;
    for (auto& l : all)
        if (congruence_class(l, rank) == congruence) picked.push_back(std::move(l));
    std::sort(picked.begin(), picked.end(), [](const DynkinLabel& a, const DynkinLabel& b) {
        const int ta = threshold_level(a), tb = threshold_level(b);
        if (ta != tb) return ta < tb;
        return a.entries() > b.entries();  // descending-first-entry tie order
    });
    return picked;
}

DynkinLabel simple_reflection(const DynkinLabel& mu, int i, const CartanData& cd) {
    std::vector<int> e(mu.entries());
    const int ci = e[static_cast<std::size_t>(i)];
    for (int s = 0; s < cd.rank; ++s) e[static_cast<std::size_t>(s)] -= ci * cd.cartan[i][s];
    return DynkinLabel(std::move(e));
}

DynkinLabel dominant_representative(const DynkinLabel& mu, const CartanData& cd) {
    DynkinLabel cur = mu;
    for (;;) {
        int neg = -1;
        for (int i = 0; i < cd.rank; ++i)
            if (cur[i] < 0) {
                neg = i;
                break;
            }
        if (neg < 0) return cur;
        cur = simple_reflection(cur, neg, cd);
    }
}

std::vector<DynkinLabel> weyl_orbit(const DynkinLabel& mu, const CartanData& cd) {
    std::set<DynkinLabel> seen{mu};
    std::vector<DynkinLabel> stack{mu};
    while (!stack.empty()) {
        DynkinLabel x = stack.back();
        stack.pop_back();
        for (int i = 0; i < cd.rank; ++i) {
            DynkinLabel y = simple_reflection(x, i, cd);
            if (seen.insert(y).second) stack.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

Rat weight_form(const DynkinLabel& mu, const DynkinLabel& nu, const CartanData& cd) {
    Rat s = 0;
    for (int i = 0; i < cd.rank; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < cd.rank; ++j)
            if (nu[j] != 0) s += Rat(mu[i]) * cd.inv[i][j] * Rat(nu[j]);
    }
    return s;
}

}  // namespace affchar

#include "affchar/oracles.hpp"

#include <algorithm>

namespace affchar {

namespace {

std::vector<DynkinLabel> positive_roots(const CartanData& cd) {
    // alpha_{i..j} = alpha_i + ... + alpha_j in Dynkin-label coordinates
    std::vector<DynkinLabel> roots;
    for (int i = 0; i < cd.rank; ++i)
        for (int j = i; j < cd.rank; ++j) {
            std::vector<int> lab(static_cast<std::size_t>(cd.rank), 0);
            for (int t = i; t <= j; ++t)
                for (int s = 0; s < cd.rank; ++s) lab[static_cast<std::size_t>(s)] += cd.cartan[t][s];
            roots.emplace_back(std::move(lab));
        }
    return roots;
}

DynkinLabel add_scaled(const DynkinLabel& a, const DynkinLabel& b, int j) {
    std::vector<int> e(a.entries());
    for (int i = 0; i < a.rank(); ++i) e[static_cast<std::size_t>(i)] += j * b[i];
    return DynkinLabel(std::move(e));
}

DynkinLabel shifted_by_rho(const DynkinLabel& mu) {
    std::vector<int> e(mu.entries());
    for (int& v : e) ++v;
    return DynkinLabel(std::move(e));
}

// Integer ceiling of 2*sqrt(bound): entry cap for dominant labels with
// (mu+rho | mu+rho) <= bound, since the smallest eigenvalue of C^-1 exceeds 1/4.
int entry_cap(const Rat& bound) {
    if (bound < 0) return 0;
    const Int num = bound.get_num(), den = bound.get_den();
    Int q = num / den + 1;
    Int root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    return static_cast<int>(to_int64(root) * 2 + 2);
}

void all_labels(int rank, int cap, std::vector<int>& cur, std::vector<DynkinLabel>& out) {
    if (static_cast<int>(cur.size()) == rank) {
        out.emplace_back(cur);
        return;
    }
    for (int v = 0; v <= cap; ++v) {
        cur.push_back(v);
        all_labels(rank, cap, cur, out);
        cur.pop_back();
    }
}

// Height of lambda - mu in root coordinates; integral whenever the two labels
// are congruent.
long long drop_height(const DynkinLabel& lambda, const DynkinLabel& mu, const CartanData& cd) {
    Rat h = 0;
    for (int i = 0; i < cd.rank; ++i)
        for (int j = 0; j < cd.rank; ++j) h += cd.inv[i][j] * Rat(lambda[j] - mu[j]);
    Rat c = h;
    c.canonicalize();
    AFFCHAR_CHECK(c.get_den() == 1, "non-integral height for congruent labels");
    return to_int64(Int(c.get_num()));
}

}  // namespace

Int WeightTable::multiplicity(int depth, const DynkinLabel& weight) const {
    auto it = mult.find({depth, weight});
    return it == mult.end() ? Int(0) : it->second;
}

CharSeries WeightTable::to_char_series() const {
    CharSeries out(highest.rank(), level, 0, max_depth);
    for (const auto& [key, m] : mult) out.add_term(key.first, key.second, m);
    return out;
}

WeightTable freudenthal_affine(const DynkinLabel& l, int level, int max_depth) {
    const int r = l.rank();
    const CartanData cd = CartanData::make(r);
    if (!l.dominant()) throw usage_error("highest weight must be dominant");
    if (threshold_level(l) > level) throw usage_error("weight is not integrable at this level");
    if (max_depth < 0) throw usage_error("max_depth must be >= 0");

    const int dual_coxeter = r + 1;
    const auto pos = positive_roots(cd);
    std::vector<DynkinLabel> all_finite = pos;
    for (const auto& a : pos) {
        std::vector<int> neg(static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i) neg[static_cast<std::size_t>(i)] = -a[i];
        all_finite.emplace_back(std::move(neg));
    }

    const Rat norm_top = weight_form(shifted_by_rho(l), shifted_by_rho(l), cd);
    const int congr = congruence_class(l, r);

    std::map<std::pair<int, DynkinLabel>, Int> dominant_mult;
    const auto lookup = [&](const DynkinLabel& nu, int depth) -> Int {
        if (depth < 0) return 0;
        auto it = dominant_mult.find({depth, dominant_representative(nu, cd)});
        return it == dominant_mult.end() ? Int(0) : it->second;
    };

    for (int depth = 0; depth <= max_depth; ++depth) {
        const Rat bound = norm_top + Rat(2 * (level + dual_coxeter) * depth);
        std::vector<DynkinLabel> cands;
        {
            std::vector<DynkinLabel> box;
            std::vector<int> cur;
            all_labels(r, entry_cap(bound), cur, box);
            for (auto& mu : box) {
                if (congruence_class(mu, r) != congr) continue;
                if (weight_form(shifted_by_rho(mu), shifted_by_rho(mu), cd) > bound) continue;
                cands.push_back(std::move(mu));
            }
        }
        std::sort(cands.begin(), cands.end(), [&](const DynkinLabel& a, const DynkinLabel& b) {
            const long long ha = drop_height(l, a, cd), hb = drop_height(l, b, cd);
            if (ha != hb) return ha < hb;  // closest to the top first
            return a < b;
        });

        for (const auto& mu : cands) {
            if (depth == 0 && mu == l) {
                dominant_mult[{0, l}] = 1;
                continue;
            }
            const Rat den = norm_top -
                            weight_form(shifted_by_rho(mu), shifted_by_rho(mu), cd) +
                            Rat(2 * (level + dual_coxeter) * depth);

            Int num = 0;
            // real roots (alpha; 0; n): n = 0 positive alpha only, n >= 1 all alpha
            for (int n = 0; n <= depth; ++n) {
                const auto& root_set = (n == 0) ? pos : all_finite;
                for (const auto& alpha : root_set) {
                    Rat prev_norm;
                    for (int j = 1;; ++j) {
                        const int dep2 = depth - j * n;
                        if (dep2 < 0) break;
                        const DynkinLabel nu = add_scaled(mu, alpha, j);
                        // the plain norm is Weyl-invariant and <= bound on every
                        // module weight; the string norm is convex in j, so once
                        // it passes the bound while rising nothing remains
                        const Rat nu_norm = weight_form(nu, nu, cd);
                        if (n == 0 && j > 1 && nu_norm > bound && nu_norm >= prev_norm) break;
                        prev_norm = nu_norm;
                        const Int m = lookup(nu, dep2);
                        if (m != 0) {
                            Rat pairing = weight_form(nu, alpha, cd) + Rat(level * n);
                            pairing.canonicalize();
                            AFFCHAR_CHECK(pairing.get_den() == 1, "non-integral root pairing");
                            num += 2 * m * Int(pairing.get_num());
                        }
                    }
                }
            }
            // imaginary roots (0; 0; n) with multiplicity r
            for (int n = 1; n <= depth; ++n)
                for (int j = 1; j * n <= depth; ++j) {
                    const Int m = lookup(mu, depth - j * n);
                    if (m != 0) num += Int(2 * r * level * n) * m;
                }

            if (den == 0) {
                AFFCHAR_CHECK(num == 0, "zero Freudenthal denominator at a weight");
                continue;
            }
            Rat q = Rat(num) / den;
            q.canonicalize();
            AFFCHAR_CHECK(q.get_den() == 1, "Freudenthal multiplicity is not an integer");
            const Int m(q.get_num());
            AFFCHAR_CHECK(m >= 0, "negative Freudenthal multiplicity");
            if (m != 0) dominant_mult[{depth, mu}] = m;
        }
    }

    WeightTable table;
    table.highest = l;
    table.level = level;
    table.max_depth = max_depth;
    for (const auto& [key, m] : dominant_mult)
        for (const auto& w : weyl_orbit(key.second, cd)) table.mult[{key.first, w}] = m;
    return table;
}

namespace {

// Dominant weights below lambda with their Freudenthal multiplicities.
std::map<DynkinLabel, Int> finite_dominant_mults(const DynkinLabel& l, const CartanData& cd) {
    const int r = cd.rank;
    const auto pos = positive_roots(cd);
    const Rat norm_top = weight_form(shifted_by_rho(l), shifted_by_rho(l), cd);
    const Rat plain_top = weight_form(l, l, cd);

    std::vector<DynkinLabel> cands;
    {
        std::vector<DynkinLabel> box;
        std::vector<int> cur;
        all_labels(r, entry_cap(norm_top), cur, box);
        for (auto& mu : box) {
            // below lambda: root coordinates of lambda - mu nonnegative integers
            bool ok = true;
            for (int i = 0; i < r && ok; ++i) {
                Rat ci = 0;
                for (int j = 0; j < r; ++j) ci += cd.inv[i][j] * Rat(l[j] - mu[j]);
                ci.canonicalize();
                if (ci.get_den() != 1 || ci < 0) ok = false;
            }
            if (ok) cands.push_back(std::move(mu));
        }
    }
    std::sort(cands.begin(), cands.end(), [&](const DynkinLabel& a, const DynkinLabel& b) {
        const long long ha = drop_height(l, a, cd), hb = drop_height(l, b, cd);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    std::map<DynkinLabel, Int> mult;
    const auto lookup = [&](const DynkinLabel& nu) -> Int {
        auto it = mult.find(dominant_representative(nu, cd));
        return it == mult.end() ? Int(0) : it->second;
    };

    for (const auto& mu : cands) {
        if (mu == l) {
            mult[l] = 1;
            continue;
        }
        const Rat den = norm_top - weight_form(shifted_by_rho(mu), shifted_by_rho(mu), cd);
        AFFCHAR_CHECK(den > 0, "finite Freudenthal denominator not positive");
        Int num = 0;
        for (const auto& alpha : pos) {
            Rat prev_norm;
            for (int j = 1;; ++j) {
                const DynkinLabel nu = add_scaled(mu, alpha, j);
                const Rat nu_norm = weight_form(nu, nu, cd);
                if (j > 1 && nu_norm > plain_top && nu_norm >= prev_norm) break;
                prev_norm = nu_norm;
                const Int m = lookup(nu);
                if (m != 0) {
                    Rat pairing = weight_form(nu, alpha, cd);
                    pairing.canonicalize();
                    AFFCHAR_CHECK(pairing.get_den() == 1, "non-integral root pairing");
                    num += 2 * m * Int(pairing.get_num());
                }
            }
        }
        Rat q = Rat(num) / den;
        q.canonicalize();
        AFFCHAR_CHECK(q.get_den() == 1, "finite multiplicity is not an integer");
        const Int m(q.get_num());
        AFFCHAR_CHECK(m >= 0, "negative finite multiplicity");
        if (m != 0) mult[mu] = m;
    }
    return mult;
}

}  // namespace

std::map<DynkinLabel, Int> finite_character(const DynkinLabel& l, int rank) {
    if (l.rank() != rank) throw usage_error("label length must equal rank");
    if (!l.dominant()) throw usage_error("highest weight must be dominant");
    const CartanData cd = CartanData::make(rank);
    std::map<DynkinLabel, Int> out;
    for (const auto& [mu, m] : finite_dominant_mults(l, cd))
        for (const auto& w : weyl_orbit(mu, cd)) out[w] = m;
    return out;
}

Int finite_dimension(const DynkinLabel& l, int rank) {
    Int dim = 0;
    for (const auto& [w, m] : finite_character(l, rank)) dim += m;
    return dim;
}

std::map<DynkinLabel, Int> tensor_decompose(const std::vector<DynkinLabel>& factors, int rank) {
    const CartanData cd = CartanData::make(rank);
    for (const auto& f : factors) {
        if (f.rank() != rank) throw usage_error("factor length must equal rank");
        if (!f.dominant()) throw usage_error("tensor factors must be dominant");
    }

    std::map<DynkinLabel, Int> table{{DynkinLabel::zero(rank), Int(1)}};
    for (const auto& f : factors) {
        const auto ft = finite_character(f, rank);
        std::map<DynkinLabel, Int> next;
        for (const auto& [w1, m1] : table)
            for (const auto& [w2, m2] : ft) {
                std::vector<int> e(w1.entries());
                for (int i = 0; i < rank; ++i) e[static_cast<std::size_t>(i)] += w2[i];
                next[DynkinLabel(std::move(e))] += m1 * m2;
            }
        table = std::move(next);
    }

    // strip highest weights; any maximal-height weight is a constituent top
    const auto height = [&](const DynkinLabel& w) {
        Rat h = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) h += cd.inv[i][j] * Rat(w[j]);
        return h;
    };

    std::map<DynkinLabel, Int> result;
    while (!table.empty()) {
        auto best = table.begin();
        Rat best_h = height(best->first);
        for (auto it = std::next(table.begin()); it != table.end(); ++it) {
            const Rat h = height(it->first);
            if (h > best_h || (h == best_h && it->first > best->first)) {
                best = it;
                best_h = h;
            }
        }
        const DynkinLabel top = best->first;
        const Int count = best->second;
        AFFCHAR_CHECK(top.dominant(), "maximal weight in a tensor table is not dominant");
        AFFCHAR_CHECK(count > 0, "negative multiplicity while stripping");
        result[top] += count;
        for (const auto& [w, m] : finite_character(top, rank)) {
            auto it = table.find(w);
            AFFCHAR_CHECK(it != table.end() && it->second >= count * m,
                          "inconsistent tensor table");
            it->second -= count * m;
            if (it->second == 0) table.erase(it);
        }
    }
    return result;
}

}  // namespace affchar

#include "affchar/fermionic.hpp"

#include <algorithm>
#include <map>

namespace affchar {

MVector::MVector(int rank, int width, bool translated)
    : rank(rank), width(width), translated(translated),
      counts(static_cast<std::size_t>(rank) * static_cast<std::size_t>(width), 0) {}

void MVector::set(int color, int row_width, int value) {
    if (value < 0 && !(translated && row_width == width - 1))
        throw usage_error("negative entry outside the translated a=k slot");
    counts[index(color, row_width)] = value;
}

long long MVector::color_total(int color) const {
    long long s = 0;
    for (int a = 0; a < width; ++a) s += static_cast<long long>(a + 1) * at(color, a);
    return s;
}

int exponent(const MVector& m, const DynkinLabel& l, const CartanData& cd, const AMatrix& amat) {
    if (m.rank != cd.rank || l.rank() != cd.rank || m.width != amat.size)
        throw usage_error("inconsistent dimensions");
    long long quad = 0;  // m (C x A) m
    for (int i = 0; i < m.rank; ++i)
        for (int a = 0; a < m.width; ++a) {
            const long long mia = m.at(i, a);
            if (mia == 0) continue;
            for (int j = 0; j < m.rank; ++j) {
                if (cd.cartan[i][j] == 0) continue;
                for (int b = 0; b < m.width; ++b) {
                    const long long mjb = m.at(j, b);
                    if (mjb == 0) continue;
                    quad += mia * cd.cartan[i][j] * amat.at(a + 1, b + 1) * mjb;
                }
            }
        }
    long long lin = 0;
    for (int i = 0; i < m.rank; ++i)
        for (int a = 0; a < m.width; ++a)
            lin += static_cast<long long>(std::min(a + 1, l[i])) * m.at(i, a);
    const long long twice = quad - 2 * lin;
    AFFCHAR_CHECK(twice % 2 == 0, "exponent is not an integer");
    return static_cast<int>(twice / 2);
}

DynkinLabel weight_of(const MVector& m, const DynkinLabel& l, const CartanData& cd) {
    if (m.rank != cd.rank || l.rank() != cd.rank) throw usage_error("inconsistent dimensions");
    std::vector<int> mu(l.entries());
    for (int j = 0; j < m.rank; ++j) {
        const long long mj = m.color_total(j);
        if (mj == 0) continue;
        for (int i = 0; i < m.rank; ++i)
            mu[static_cast<std::size_t>(i)] -= static_cast<int>(cd.cartan[j][i] * mj);
    }
    return DynkinLabel(std::move(mu));
}

namespace {

long long checked_int64(const Rat& v) {
    Rat c = v;
    c.canonicalize();
    AFFCHAR_CHECK(c.get_den() == 1, "scaled Schur entry is not integral");
    return to_int64(Int(c.get_num()));
}

// Solve M * X = B exactly by Gauss-Jordan; M square nonsingular.
std::vector<std::vector<Rat>> solve(std::vector<std::vector<Rat>> m,
                                    std::vector<std::vector<Rat>> b) {
    const std::size_t n = m.size();
    const std::size_t w = b.empty() ? 0 : b[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        AFFCHAR_CHECK(piv < n, "singular block in a positive definite form");
        std::swap(m[piv], m[col]);
        std::swap(b[piv], b[col]);
        const Rat p = m[col][col];
        for (auto& x : m[col]) x /= p;
        for (auto& x : b[col]) x /= p;
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            const Rat f = m[row][col];
            for (std::size_t t = 0; t < n; ++t) m[row][t] -= f * m[col][t];
            for (std::size_t t = 0; t < w; ++t) b[row][t] -= f * b[col][t];
        }
    }
    return b;
}

Int lcm_den(const Int& acc, const Rat& v) {
    Rat c = v;
    c.canonicalize();
    Int den(c.get_den());
    Int g;
    mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
    return acc / g * den;
}

}  // namespace

FermionicEnumerator::FermionicEnumerator(const DynkinLabel& l, int level, bool translated)
    : l_(l), rank_(l.rank()), width_(level), vars_(l.rank() * level), translated_(translated) {
    if (level < 1) throw usage_error("level must be >= 1");
    const CartanData cd = CartanData::make(rank_);
    const AMatrix amat{width_};

    q_.assign(static_cast<std::size_t>(vars_), std::vector<long long>(static_cast<std::size_t>(vars_), 0));
    lin_.assign(static_cast<std::size_t>(vars_), 0);
    for (int i = 0; i < rank_; ++i)
        for (int a = 0; a < width_; ++a) {
            const int t = i * width_ + a;
            lin_[static_cast<std::size_t>(t)] = std::min(a + 1, l[i]);
            for (int j = 0; j < rank_; ++j)
                for (int b = 0; b < width_; ++b)
                    q_[static_cast<std::size_t>(t)][static_cast<std::size_t>(j * width_ + b)] =
                        static_cast<long long>(cd.cartan[i][j]) * amat.at(a + 1, b + 1);
        }

    // Conditional minima over real completions, one quadratic per prefix
    // length: mu_p(x) = 1/2 x^T (Q11 - Q12 Q22^-1 Q21) x - (L1 - Q12 Q22^-1 L2).x
    //                  - 1/2 L2^T Q22^-1 L2, stored integer-scaled.
    levels_.resize(static_cast<std::size_t>(vars_));
    for (int p = 1; p <= vars_; ++p) {
        std::vector<std::vector<Rat>> s(static_cast<std::size_t>(p), std::vector<Rat>(static_cast<std::size_t>(p)));
        std::vector<Rat> c(static_cast<std::size_t>(p));
        Rat d = 0;
        if (p == vars_) {
            for (int u = 0; u < p; ++u) {
                c[static_cast<std::size_t>(u)] = to_rat(lin_[static_cast<std::size_t>(u)]);
                for (int v = 0; v < p; ++v)
                    s[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                        to_rat(q_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
            }
        } else {
            const int rest = vars_ - p;
            std::vector<std::vector<Rat>> q22(static_cast<std::size_t>(rest),
                                              std::vector<Rat>(static_cast<std::size_t>(rest)));
            std::vector<std::vector<Rat>> rhs(static_cast<std::size_t>(rest),
                                              std::vector<Rat>(static_cast<std::size_t>(p) + 1));
            for (int u = 0; u < rest; ++u) {
                for (int v = 0; v < rest; ++v)
                    q22[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                        to_rat(q_[static_cast<std::size_t>(p + u)][static_cast<std::size_t>(p + v)]);
                for (int v = 0; v < p; ++v)
                    rhs[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                        to_rat(q_[static_cast<std::size_t>(p + u)][static_cast<std::size_t>(v)]);
                rhs[static_cast<std::size_t>(u)][static_cast<std::size_t>(p)] =
                    to_rat(lin_[static_cast<std::size_t>(p + u)]);
            }
            const auto sol = solve(std::move(q22), std::move(rhs));  // [Q22^-1 Q21 | Q22^-1 L2]
            for (int u = 0; u < p; ++u) {
                c[static_cast<std::size_t>(u)] = to_rat(lin_[static_cast<std::size_t>(u)]);
                for (int t = 0; t < rest; ++t)
                    c[static_cast<std::size_t>(u)] -=
                        to_rat(q_[static_cast<std::size_t>(u)][static_cast<std::size_t>(p + t)]) *
                        sol[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)];
                for (int v = 0; v < p; ++v) {
                    Rat acc = to_rat(q_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
                    for (int t = 0; t < rest; ++t)
                        acc -= to_rat(q_[static_cast<std::size_t>(u)][static_cast<std::size_t>(p + t)]) *
                               sol[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)];
                    s[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = acc;
                }
            }
            for (int t = 0; t < rest; ++t)
                d -= to_rat(lin_[static_cast<std::size_t>(p + t)]) *
                     sol[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)] / 2;
        }

        Int scale(1);
        for (const auto& row : s)
            for (const auto& v : row) scale = lcm_den(scale, v);
        for (const auto& v : c) scale = lcm_den(scale, v);
        scale = lcm_den(scale, d * 2);

        Level lv;
        lv.scale = to_int64(scale);
        const Rat sc(scale);
        lv.S.assign(static_cast<std::size_t>(p), std::vector<long long>(static_cast<std::size_t>(p), 0));
        lv.c2.assign(static_cast<std::size_t>(p), 0);
        for (int u = 0; u < p; ++u) {
            lv.c2[static_cast<std::size_t>(u)] = checked_int64(c[static_cast<std::size_t>(u)] * sc * 2);
            for (int v = 0; v < p; ++v)
                lv.S[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
                    checked_int64(s[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] * sc);
        }
        lv.d2 = checked_int64(d * sc * 2);
        levels_[static_cast<std::size_t>(p) - 1] = std::move(lv);
    }
}

int FermionicEnumerator::exact_exponent(const std::vector<int>& full) const {
    long long quad = 0, lin = 0;
    for (int u = 0; u < vars_; ++u) {
        const long long xu = full[static_cast<std::size_t>(u)];
        if (xu == 0) continue;
        lin += lin_[static_cast<std::size_t>(u)] * xu;
        for (int v = 0; v < vars_; ++v)
            quad += xu * q_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] *
                    full[static_cast<std::size_t>(v)];
    }
    const long long twice = quad - 2 * lin;
    AFFCHAR_CHECK(twice % 2 == 0, "exponent is not an integer");
    return static_cast<int>(twice / 2);
}

void FermionicEnumerator::enumerate(int max_exp,
                                    const std::function<void(const MVector&, int)>& visit) const {
    std::vector<int> x;
    x.reserve(static_cast<std::size_t>(vars_));
    scan(x, max_exp, visit);
}

void FermionicEnumerator::scan(std::vector<int>& prefix, int max_exp,
                               const std::function<void(const MVector&, int)>& visit) const {
    const int t = static_cast<int>(prefix.size());
    if (t == vars_) {
        const int e = exact_exponent(prefix);
        AFFCHAR_CHECK(e <= max_exp, "leaf escaped the pruning bound");
        MVector m(rank_, width_, translated_);
        for (int i = 0; i < rank_; ++i)
            for (int a = 0; a < width_; ++a)
                m.set(i, a, prefix[static_cast<std::size_t>(i * width_ + a)]);
        visit(m, e);
        return;
    }

    const Level& lv = levels_[static_cast<std::size_t>(t)];
    long long base = lv.d2;
    for (int u = 0; u < t; ++u) {
        const long long xu = prefix[static_cast<std::size_t>(u)];
        if (xu == 0) continue;
        base -= lv.c2[static_cast<std::size_t>(u)] * xu;
        for (int v = 0; v < t; ++v)
            base += xu * lv.S[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] *
                    prefix[static_cast<std::size_t>(v)];
    }
    long long lin = -lv.c2[static_cast<std::size_t>(t)];
    for (int u = 0; u < t; ++u)
        lin += 2 * lv.S[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] *
               prefix[static_cast<std::size_t>(u)];
    const long long quad = lv.S[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
    AFFCHAR_CHECK(quad > 0, "conditional form lost positive definiteness");
    const long long budget = 2 * lv.scale * static_cast<long long>(max_exp);

    const auto value = [&](long long v) { return (quad * v + lin) * v + base; };

    const bool nonneg = !(translated_ && (t % width_) == width_ - 1);
    // floor(-lin / (2 quad)) without truncation-toward-zero surprises
    long long center = -lin / (2 * quad);
    if ((-lin) % (2 * quad) != 0 && ((-lin < 0) != (2 * quad < 0))) --center;
    if (nonneg && center < 0) center = 0;

    long long v = center;
    if (value(v) > budget) ++v;  // the feasible interval may start past floor(vertex)
    for (; value(v) <= budget; ++v) {
        AFFCHAR_CHECK(v < 100000, "enumeration range exploded");
        prefix.push_back(static_cast<int>(v));
        scan(prefix, max_exp, visit);
        prefix.pop_back();
    }
    for (v = center - 1; (!nonneg || v >= 0) && value(v) <= budget; --v) {
        AFFCHAR_CHECK(v > -100000, "enumeration range exploded");
        prefix.push_back(static_cast<int>(v));
        scan(prefix, max_exp, visit);
        prefix.pop_back();
    }
}

namespace {

using Coeffs = std::vector<Int>;

Coeffs convolve(const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size(), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < out.size() && j < b.size(); ++j) {
            if (b[j] == 0) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

struct SeriesAssembler {
    int width_q;  // coefficients tracked on [0, width_q]
    std::map<int, Coeffs> inv_poch;        // m -> coefficients of 1/(q)_m
    std::map<std::vector<int>, Coeffs> products;

    explicit SeriesAssembler(int width) : width_q(width) {}

    const Coeffs& pochhammer_inverse(int m) {
        auto it = inv_poch.find(m);
        if (it != inv_poch.end()) return it->second;
        const TruncatedSeries s = inv_pochhammer_series(m, width_q);
        Coeffs c(static_cast<std::size_t>(width_q) + 1, Int(0));
        for (const auto& [e, v] : s.terms()) c[static_cast<std::size_t>(e)] = v;
        return inv_poch.emplace(m, std::move(c)).first->second;
    }

    const Coeffs& denominator(std::vector<int> key) {
        std::sort(key.begin(), key.end());
        auto it = products.find(key);
        if (it != products.end()) return it->second;
        Coeffs acc(static_cast<std::size_t>(width_q) + 1, Int(0));
        acc[0] = 1;
        for (int v : key) acc = convolve(acc, pochhammer_inverse(v));
        return products.emplace(std::move(key), std::move(acc)).first->second;
    }
};

CharSeries assemble(const DynkinLabel& l, int level, int max_exp, bool translated,
                    const std::vector<std::pair<MVector, int>>& leaves) {
    const CartanData cd = CartanData::make(l.rank());
    int min_e = 0;
    for (const auto& [m, e] : leaves) min_e = std::min(min_e, e);
    const int width = max_exp - min_e;

    SeriesAssembler asmbl(width);
    std::map<DynkinLabel, Coeffs> acc;
    std::vector<int> key;
    for (const auto& [m, e] : leaves) {
        key.clear();
        for (int i = 0; i < m.rank; ++i)
            for (int a = 0; a < m.width - (translated ? 1 : 0); ++a)
                if (m.at(i, a) > 0) key.push_back(m.at(i, a));
        const Coeffs& t = asmbl.denominator(key);
        const DynkinLabel w = weight_of(m, l, cd);
        auto [it, inserted] = acc.try_emplace(w);
        if (inserted) it->second.assign(static_cast<std::size_t>(width) + 1, Int(0));
        Coeffs& dst = it->second;
        for (int d = 0; d + e <= max_exp; ++d)
            if (t[static_cast<std::size_t>(d)] != 0)
                dst[static_cast<std::size_t>(e - min_e + d)] += t[static_cast<std::size_t>(d)];
    }

    Coeffs infr;
    if (translated) {
        const TruncatedSeries inf = inv_pochhammer_series_inf(width);
        Coeffs one(static_cast<std::size_t>(width) + 1, Int(0));
        for (const auto& [e, v] : inf.terms()) one[static_cast<std::size_t>(e)] = v;
        infr.assign(static_cast<std::size_t>(width) + 1, Int(0));
        infr[0] = 1;
        for (int i = 0; i < l.rank(); ++i) infr = convolve(infr, one);
    }

    CharSeries out(l.rank(), level, min_e, max_exp);
    for (auto& [w, coeffs] : acc) {
        const Coeffs series = translated ? convolve(coeffs, infr) : std::move(coeffs);
        for (int idx = 0; idx <= width; ++idx)
            if (series[static_cast<std::size_t>(idx)] != 0)
                out.add_term(min_e + idx, w, series[static_cast<std::size_t>(idx)]);
    }
    return out;
}

CharSeries fermionic_series(const DynkinLabel& l, int level, int max_exp, bool translated) {
    if (!l.dominant()) throw usage_error("highest weight must be dominant");
    if (max_exp < 0) throw usage_error("max_exp must be >= 0");
    const FermionicEnumerator en(l, level, translated);
    std::vector<std::pair<MVector, int>> leaves;
    en.enumerate(max_exp, [&](const MVector& m, int e) { leaves.emplace_back(m, e); });
    return assemble(l, level, max_exp, translated, leaves);
}

}  // namespace

CharSeries ch_F(const DynkinLabel& l, int level, int max_exp) {
    return fermionic_series(l, level, max_exp, false);
}

CharSeries ch_F_inf(const DynkinLabel& l, int level, int max_exp) {
    return fermionic_series(l, level, max_exp, true);
}

namespace testing {

namespace {
CharSeries boxed(const DynkinLabel& l, int level, int max_exp, int box, bool translated) {
    const CartanData cd = CartanData::make(l.rank());
    const AMatrix amat{level};
    const int vars = l.rank() * level;
    std::vector<std::pair<MVector, int>> leaves;
    std::vector<int> cur(static_cast<std::size_t>(vars), 0);
    const auto rec = [&](auto&& self, int t) -> void {
        if (t == vars) {
            MVector m(l.rank(), level, translated);
            for (int i = 0; i < l.rank(); ++i)
                for (int a = 0; a < level; ++a)
                    m.set(i, a, cur[static_cast<std::size_t>(i * level + a)]);
            const int e = exponent(m, l, cd, amat);
            if (e <= max_exp) leaves.emplace_back(std::move(m), e);
            return;
        }
        const bool nonneg = !(translated && (t % level) == level - 1);
        for (int v = nonneg ? 0 : -box; v <= box; ++v) {
            cur[static_cast<std::size_t>(t)] = v;
            self(self, t + 1);
        }
        cur[static_cast<std::size_t>(t)] = 0;
    };
    rec(rec, 0);
    return assemble(l, level, max_exp, translated, leaves);
}
}  // namespace

CharSeries ch_F_boxed(const DynkinLabel& l, int level, int max_exp, int box) {
    return boxed(l, level, max_exp, box, false);
}

CharSeries ch_F_inf_boxed(const DynkinLabel& l, int level, int max_exp, int box) {
    return boxed(l, level, max_exp, box, true);
}

}  // namespace testing

}  // namespace affchar

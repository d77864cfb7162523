#include "affchar/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "affchar/char_engine.hpp"
#include "affchar/fermionic.hpp"
#include "affchar/kostka.hpp"
#include "affchar/oracles.hpp"

namespace affchar {

namespace {

QLaurent poly(std::initializer_list<std::pair<int, int>> terms) {
    QLaurent p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

std::string label_str(const DynkinLabel& w) {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
    os << ')';
    return os.str();
}

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           const std::string& detail = "") {
    out.push_back({name, pass, pass ? "" : detail});
}

// Exact equality of two series on every degree both windows cover.
bool series_equal(const CharSeries& a, const CharSeries& b, int through, std::string* why) {
    const int from = std::min(a.empty() ? 0 : a.min_degree(), b.empty() ? 0 : b.min_degree());
    for (int d = from; d <= through; ++d) {
        if (a.slice(d) == b.slice(d)) continue;
        if (why) {
            std::ostringstream os;
            os << "series differ at degree " << d;
            *why = os.str();
        }
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- fixtures

std::vector<CheckResult> suite_kostka_matrix_fixture() {
    std::vector<CheckResult> out;
    const std::vector<DynkinLabel> expected_basis = {
        DynkinLabel({0, 0, 0}), DynkinLabel({1, 0, 1}), DynkinLabel({0, 2, 0}),
        DynkinLabel({2, 1, 0}), DynkinLabel({0, 1, 2}), DynkinLabel({4, 0, 0}),
        DynkinLabel({2, 0, 2}), DynkinLabel({1, 2, 1}), DynkinLabel({0, 4, 0}),
        DynkinLabel({0, 0, 4})};

    const KostkaMatrix k = kostka_matrix(3, 4, 0);
    check(out, "basis ordering", k.basis == expected_basis);

    const std::map<std::pair<int, int>, QLaurent> expected_k = {
        {{0, 1}, poly({{1, 1}})},  {{0, 6}, poly({{2, 1}})},
        {{1, 3}, poly({{1, 1}})},  {{1, 4}, poly({{1, 1}})},
        {{1, 6}, poly({{1, 1}})},  {{1, 7}, poly({{2, 1}})},
        {{2, 7}, poly({{1, 1}, {2, 1}})},
        {{3, 7}, poly({{1, 1}})},  {{4, 7}, poly({{1, 1}})}};
    const std::map<std::pair<int, int>, QLaurent> expected_inv = {
        {{0, 1}, poly({{1, -1}})}, {{0, 3}, poly({{2, 1}})},
        {{0, 4}, poly({{2, 1}})},  {{0, 7}, poly({{3, -1}})},
        {{1, 3}, poly({{1, -1}})}, {{1, 4}, poly({{1, -1}})},
        {{1, 6}, poly({{1, -1}})}, {{1, 7}, poly({{2, 1}})},
        {{2, 7}, poly({{1, -1}, {2, -1}})},
        {{3, 7}, poly({{1, -1}})}, {{4, 7}, poly({{1, -1}})}};

    const auto matches = [](const KostkaMatrix& m,
                            const std::map<std::pair<int, int>, QLaurent>& expect,
                            std::string& why) {
        for (int r = 0; r < m.size(); ++r)
            for (int c = 0; c < m.size(); ++c) {
                QLaurent want;
                if (r == c)
                    want = QLaurent::one();
                else if (auto it = expect.find({r, c}); it != expect.end())
                    want = it->second;
                if (m.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != want) {
                    why = "entry (" + std::to_string(r) + "," + std::to_string(c) + ") differs";
                    return false;
                }
            }
        return true;
    };

    std::string why;
    check(out, "matrix entries", matches(k, expected_k, why), why);
    const KostkaMatrix ki = invert(k);
    check(out, "inverse entries", matches(ki, expected_inv, why), why);
    return out;
}

std::map<int, std::map<DynkinLabel, Int>> su2k2_expected() {
    const auto row = [](std::initializer_list<std::pair<int, int>> ws) {
        std::map<DynkinLabel, Int> m;
        for (const auto& [w, c] : ws) m[DynkinLabel({w})] = c;
        return m;
    };
    return {{0, row({{0, 1}})},
            {1, row({{-2, 1}, {0, 1}, {2, 1}})},
            {2, row({{-4, 1}, {-2, 2}, {0, 3}, {2, 2}, {4, 1}})},
            {3, row({{-4, 1}, {-2, 4}, {0, 5}, {2, 4}, {4, 1}})},
            {4, row({{-4, 3}, {-2, 7}, {0, 10}, {2, 7}, {4, 3}})},
            {5, row({{-6, 1}, {-4, 5}, {-2, 13}, {0, 16}, {2, 13}, {4, 5}, {6, 1}})},
            {6, row({{-6, 2}, {-4, 10}, {-2, 21}, {0, 28}, {2, 21}, {4, 10}, {6, 2}})}};
}

std::vector<CheckResult> suite_su2k2_figure() {
    std::vector<CheckResult> out;
    const auto expected = su2k2_expected();
    const CharSeries fermionic = ch_H(DynkinLabel({0}), 2, 6);
    const CharSeries oracle = freudenthal_affine(DynkinLabel({0}), 2, 6).to_char_series();
    for (const auto& [depth, row] : expected) {
        check(out, "fermionic depth " + std::to_string(depth), fermionic.slice(depth) == row,
              "weight-diagram row differs");
        check(out, "freudenthal depth " + std::to_string(depth), oracle.slice(depth) == row,
              "weight-diagram row differs");
    }
    std::string why;
    check(out, "methods agree", series_equal(fermionic, oracle, 6, &why), why);
    return out;
}

std::vector<CheckResult> suite_su4_tables() {
    std::vector<CheckResult> out;
    // reference level-4 su(4) expansions: n -> off-diagonal K_{l,n} in q
    const std::vector<std::pair<DynkinLabel, std::map<DynkinLabel, QLaurent>>> table = {
        {DynkinLabel({1, 1, 0}), {{DynkinLabel({0, 0, 1}), poly({{1, 1}})}}},
        {DynkinLabel({2, 1, 0}), {{DynkinLabel({1, 0, 1}), poly({{1, 1}})}}},
        {DynkinLabel({1, 2, 0}), {{DynkinLabel({0, 1, 1}), poly({{1, 1}})}}},
        {DynkinLabel({1, 1, 1}),
         {{DynkinLabel({0, 1, 0}), poly({{1, 1}, {2, 1}})},
          {DynkinLabel({2, 0, 0}), poly({{1, 1}})},
          {DynkinLabel({0, 0, 2}), poly({{1, 1}})}}},
        {DynkinLabel({3, 1, 0}), {{DynkinLabel({2, 0, 1}), poly({{1, 1}})}}},
        {DynkinLabel({2, 2, 0}),
         {{DynkinLabel({1, 1, 1}), poly({{1, 1}})},
          {DynkinLabel({0, 0, 2}), poly({{2, 1}})}}},
        {DynkinLabel({2, 1, 1}),
         {{DynkinLabel({1, 1, 0}), poly({{1, 1}, {2, 1}})},
          {DynkinLabel({3, 0, 0}), poly({{1, 1}})},
          {DynkinLabel({1, 0, 2}), poly({{1, 1}})},
          {DynkinLabel({0, 0, 1}), poly({{2, 1}})}}},
        {DynkinLabel({1, 3, 0}), {{DynkinLabel({0, 2, 1}), poly({{1, 1}})}}},
        {DynkinLabel({1, 2, 1}),
         {{DynkinLabel({0, 2, 0}), poly({{1, 1}, {2, 1}})},
          {DynkinLabel({2, 1, 0}), poly({{1, 1}})},
          {DynkinLabel({0, 1, 2}), poly({{1, 1}})},
          {DynkinLabel({1, 0, 1}), poly({{2, 1}})}}}};

    for (const auto& [n, coeffs] : table) {
        const Decomposition d = decompose_fusion(n, 3);
        std::map<DynkinLabel, QLaurent> got;
        for (const auto& [l, c] : d.terms)
            if (l != n) got[l] = substitute_q_inverse(c);  // back to q for comparison
        check(out, "coefficients " + label_str(n), got == coeffs,
              "Kostka column differs from the printed table");

        const VerifyReport rep = verify_decomposition(n, 4, 4);
        check(out, "series identity " + label_str(n), rep.equal, rep.detail);
    }
    return out;
}

std::vector<CheckResult> suite_l1_0_l3() {
    std::vector<CheckResult> out;
    const int level = 4, max_exp = 4;
    for (const auto& [l1, l3] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        const DynkinLabel n({l1, 0, l3});
        const CharSeries lhs = ch_F_inf(n, level, max_exp);
        CharSeries rhs(3, level, -std::min(l1, l3), max_exp);
        for (int j = 0; j <= std::min(l1, l3); ++j) {
            const CharSeries h = ch_H(DynkinLabel({l1 - j, 0, l3 - j}), level, max_exp + j);
            rhs = rhs + h.scaled(QLaurent::monomial(-j, 1));
        }
        std::string why;
        check(out, "l1=" + std::to_string(l1) + " l3=" + std::to_string(l3),
              series_equal(lhs, rhs, max_exp, &why), why);
    }
    return out;
}

std::vector<CheckResult> suite_lr_specialization() {
    std::vector<CheckResult> out;
    for (int rank = 1; rank <= 3; ++rank) {
        bool ok = true;
        std::string why;
        std::vector<DynkinLabel> ns = dominant_weights(rank, 4, 0);
        for (int cls = 1; cls <= rank; ++cls) {
            const auto more = dominant_weights(rank, 4, cls);
            ns.insert(ns.end(), more.begin(), more.end());
        }
        for (const auto& n : ns) {
            std::vector<DynkinLabel> factors;
            for (int i = 0; i < rank; ++i)
                if (n[i] > 0) {
                    std::vector<int> f(static_cast<std::size_t>(rank), 0);
                    f[static_cast<std::size_t>(i)] = n[i];
                    factors.emplace_back(std::move(f));
                }
            const auto tensor = tensor_decompose(factors, rank);
            for (const auto& l :
                 dominant_weights(rank, threshold_level(n), congruence_class(n, rank))) {
                const Int lr = lr_coefficient(l, n, rank);
                auto it = tensor.find(l);
                const Int want = it == tensor.end() ? Int(0) : it->second;
                if (lr != want) {
                    ok = false;
                    why = "l=" + label_str(l) + " n=" + label_str(n) + ": Kostka(1) " +
                          lr.get_str() + " vs tensor " + want.get_str();
                    break;
                }
            }
            // and every tensor constituent must be matched on the Kostka side
            for (const auto& [l, m] : tensor) {
                if (lr_coefficient(l, n, rank) != m) {
                    ok = false;
                    why = "tensor term " + label_str(l) + " missing from Kostka";
                    break;
                }
            }
            if (!ok) break;
        }
        check(out, "rank " + std::to_string(rank) + " grid", ok, why);
    }

    // the classic multiset {1,1,1,2} for (0,0,1)x(0,1,0)x(1,0,0) in su(4)
    const auto td = tensor_decompose(
        {DynkinLabel({0, 0, 1}), DynkinLabel({0, 1, 0}), DynkinLabel({1, 0, 0})}, 3);
    const std::map<DynkinLabel, Int> want = {{DynkinLabel({1, 1, 1}), 1},
                                             {DynkinLabel({0, 0, 2}), 1},
                                             {DynkinLabel({2, 0, 0}), 1},
                                             {DynkinLabel({0, 1, 0}), 2}};
    check(out, "su(4) fundamental product", td == want, "multiset differs");
    return out;
}

// ---------------------------------------------------------------- properties

std::vector<CheckResult> suite_properties() {
    std::vector<CheckResult> out;

    {  // vanishing rules over the full grid
        bool ok = true;
        std::string why;
        for (int rank = 1; rank <= 3 && ok; ++rank) {
            std::vector<DynkinLabel> all;
            for (int cls = 0; cls <= rank; ++cls) {
                const auto part = dominant_weights(rank, 5, cls);
                all.insert(all.end(), part.begin(), part.end());
            }
            for (const auto& l : all) {
                for (const auto& n : all) {
                    const QLaurent k = kostka_poly(l, n, rank);
                    const int kl = threshold_level(l), kn = threshold_level(n);
                    const bool must_vanish =
                        kl > kn || (kl == kn && l != n) ||
                        congruence_class(l, rank) != congruence_class(n, rank);
                    if (must_vanish && !k.is_zero()) {
                        ok = false;
                        why = "K" + label_str(l) + label_str(n) + " should vanish";
                        break;
                    }
                    if (l == n && !k.is_one()) {
                        ok = false;
                        why = "K" + label_str(l) + label_str(l) + " != 1";
                        break;
                    }
                    if (!k.has_nonnegative_coefficients()) {
                        ok = false;
                        why = "negative coefficient in K" + label_str(l) + label_str(n);
                        break;
                    }
                }
                if (!ok) break;
            }
        }
        check(out, "kostka vanishing rules", ok, why);
    }

    {  // K K^-1 = K^-1 K = I across the grid (invert checks one side itself)
        bool ok = true;
        std::string why;
        for (int rank = 1; rank <= 3 && ok; ++rank)
            for (int cls = 0; cls <= rank && ok; ++cls) {
                const KostkaMatrix k = kostka_matrix(rank, 5, cls);
                const KostkaMatrix ki = invert(k);
                for (int r = 0; r < k.size() && ok; ++r)
                    for (int c = 0; c < k.size(); ++c) {
                        QLaurent acc;
                        for (int t = 0; t < k.size(); ++t)
                            acc = acc +
                                  ki.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] *
                                      k.entries[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
                        const bool good = (r == c) ? acc.is_one() : acc.is_zero();
                        if (!good) {
                            ok = false;
                            why = "K^-1 K != I at rank " + std::to_string(rank);
                            break;
                        }
                    }
            }
        check(out, "kostka inverse identity", ok, why);
    }

    {  // ch_H positivity and exact cancellation (asserted inside ch_H too)
        bool ok = true;
        std::string why;
        const auto probe = [&](const DynkinLabel& l, int level, int d) {
            const CharSeries h = ch_H(l, level, d);
            if (!h.all_nonnegative() || (!h.empty() && h.min_degree() < 0)) {
                ok = false;
                why = "ch_H " + label_str(l) + " level " + std::to_string(level);
            }
        };
        for (int level = 1; level <= 3 && ok; ++level)
            for (int t = 0; t <= level && ok; ++t)
                probe(DynkinLabel({t}), level, 4);
        for (int level = 1; level <= 3 && ok; ++level)
            for (int a = 0; a <= level && ok; ++a)
                for (int b = 0; a + b <= level && ok; ++b) probe(DynkinLabel({a, b}), level, 3);
        if (ok) probe(DynkinLabel({1, 1, 0}), 4, 3);
        if (ok) probe(DynkinLabel({1, 2, 1}), 4, 3);
        check(out, "ch_H positivity and cancellation", ok, why);
    }

    {  // rectangular identity ch_H = ch_F_inf
        bool ok = true;
        std::string why;
        for (int rank = 1; rank <= 3 && ok; ++rank)
            for (int level = 1; level <= 4 && ok; ++level) {
                std::vector<DynkinLabel> rects = {DynkinLabel::zero(rank)};
                for (int p = 0; p < rank; ++p)
                    for (int c = 1; c <= level; ++c) {
                        std::vector<int> e(static_cast<std::size_t>(rank), 0);
                        e[static_cast<std::size_t>(p)] = c;
                        rects.emplace_back(std::move(e));
                    }
                for (const auto& l : rects) {
                    const int d = 4;
                    if (!series_equal(ch_H(l, level, d), ch_F_inf(l, level, d), d, &why)) {
                        ok = false;
                        why = "ch_H != ch_F_inf at " + label_str(l) + ": " + why;
                        break;
                    }
                }
            }
        check(out, "rectangular identity", ok, why);
    }

    {  // rank-1 Kostka matrices are the identity
        bool ok = true;
        for (int cls = 0; cls <= 1 && ok; ++cls) {
            const KostkaMatrix k = kostka_matrix(1, 6, cls);
            for (int r = 0; r < k.size() && ok; ++r)
                for (int c = 0; c < k.size(); ++c) {
                    const auto& e = k.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                    if (r == c ? !e.is_one() : !e.is_zero()) {
                        ok = false;
                        break;
                    }
                }
        }
        check(out, "rank-1 identity matrix", ok, "off-diagonal Kostka entry at rank 1");
    }

    {  // q-binomial symmetry, q=1 specialization, Pascal recurrence
        bool ok = true;
        std::string why;
        const auto binom = [](int n, int m) {
            Int b = 1;
            for (int i = 1; i <= m; ++i) b = b * (n + i) / i;
            return b;
        };
        for (int n = 0; n <= 8 && ok; ++n)
            for (int m = 0; m <= 8 && ok; ++m) {
                const QLaurent b = q_binomial(n, m);
                if (b != q_binomial(m, n)) {
                    ok = false;
                    why = "symmetry fails";
                } else if (b.eval_at_one() != binom(n, m)) {
                    ok = false;
                    why = "q=1 specialization fails";
                } else if (n >= 1 && m >= 1 &&
                           b != q_binomial(n, m - 1) + q_binomial(n - 1, m).shifted(m)) {
                    ok = false;
                    why = "Pascal recurrence fails";
                }
            }
        check(out, "q-binomial identities", ok, why);
    }

    {  // pruned enumeration is lossless against the naive box at rank 1
        bool ok = true;
        std::string why;
        for (int level = 1; level <= 2 && ok; ++level)
            for (int t = 0; t <= level && ok; ++t) {
                const DynkinLabel l({t});
                if (ch_F(l, level, 4) != testing::ch_F_boxed(l, level, 4, 8)) {
                    ok = false;
                    why = "ch_F pruned/naive mismatch at " + label_str(l);
                }
                if (ok && ch_F_inf(l, level, 4) != testing::ch_F_inf_boxed(l, level, 4, 8)) {
                    ok = false;
                    why = "ch_F_inf pruned/naive mismatch at " + label_str(l);
                }
            }
        check(out, "pruned vs naive enumeration", ok, why);
    }

    return out;
}

std::vector<CheckResult> suite_weyl_translation() {
    std::vector<CheckResult> out;
    const AffineWeight vac{DynkinLabel({0}), 2, 0};
    const AffineWeight v1 = weyl_translate(vac, {1});
    const AffineWeight vm1 = weyl_translate(vac, {-1});
    check(out, "T^1 vacuum", v1 == AffineWeight{DynkinLabel({4}), 2, -2},
          "expected (4; 2; -2)");
    check(out, "T^-1 vacuum", vm1 == AffineWeight{DynkinLabel({-4}), 2, -2},
          "expected (-4; 2; -2)");
    check(out, "T^0 identity", weyl_translate(vac, {0}) == vac, "expected fixed point");
    return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    return {"kostka-matrix-fixture", "su2k2-figure",      "su4-level4-tables",
            "l1-0-l3-relation",      "lr-specialization", "properties",
            "weyl-translation",      "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
    if (suite == "kostka-matrix-fixture") return suite_kostka_matrix_fixture();
    if (suite == "su2k2-figure") return suite_su2k2_figure();
    if (suite == "su4-level4-tables") return suite_su4_tables();
    if (suite == "l1-0-l3-relation") return suite_l1_0_l3();
    if (suite == "lr-specialization") return suite_lr_specialization();
    if (suite == "properties") return suite_properties();
    if (suite == "weyl-translation") return suite_weyl_translation();
    if (suite == "all") {
        std::vector<CheckResult> out;
        for (const auto& name : verify_suite_names()) {
            if (name == "all") continue;
            auto part = run_verify_suite(name);
            for (auto& r : part) r.name = name + ": " + r.name;
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    throw usage_error("unknown verify suite: " + suite);
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

}  // namespace affchar

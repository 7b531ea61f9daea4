#include <catch2/catch_amalgamated.hpp>

#include <qschur/combin.hpp>

#include <algorithm>
#include <set>

using namespace qschur;

namespace {

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// |D_lam| = r! / prod(lam_a!)
long long multinomial(const Composition& lam) {
    long long r = factorial(lam.degree());
    for (int a = 0; a < lam.arity(); ++a) r /= factorial(lam[a]);
    return r;
}

}  // namespace

TEST_CASE("compositions enumeration") {
    const auto c22 = compositions(2, 2);
    REQUIRE(c22.size() == 3);
    CHECK(c22[0].parts() == std::vector<int>{2, 0});
    CHECK(c22[1].parts() == std::vector<int>{1, 1});
    CHECK(c22[2].parts() == std::vector<int>{0, 2});

    CHECK(compositions(1, 5).size() == 1);
    CHECK(compositions(1, 5)[0].parts() == std::vector<int>{5});

    // stars and bars oracle
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= 5; ++r) {
            const auto all = compositions(n, r);
            CHECK(static_cast<long long>(all.size()) == binom(n + r - 1, r));
            std::set<std::vector<int>> distinct;
            for (const auto& c : all) {
                CHECK(c.degree() == r);
                distinct.insert(c.parts());
            }
            CHECK(distinct.size() == all.size());
        }
    CHECK(compositions(3, 3).size() == 10);
}

TEST_CASE("dominance order") {
    CHECK(dominates(Composition({2, 0}), Composition({1, 1})));
    CHECK_FALSE(dominates(Composition({1, 1}), Composition({2, 0})));
    const Composition lam({1, 2, 0});
    CHECK(dominates(lam, lam));
    CHECK_FALSE(strictly_dominates(lam, lam));
    CHECK_THROWS_AS(dominates(Composition({1, 1}), Composition({1, 1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(dominates(Composition({2, 1}), Composition({1, 1})), std::invalid_argument);

    // partial order on Lambda(3,4): reflexive, antisymmetric, transitive
    const auto all = compositions(3, 4);
    for (const auto& a : all) {
        CHECK(dominates(a, a));
        for (const auto& b : all) {
            if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
            for (const auto& c : all)
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
    }
}

TEST_CASE("y_pairs enumeration and count") {
    const auto y22 = y_pairs(2, 2);
    CHECK(y22.size() == 10);
    // brute force oracle: i weakly increasing, ties force j non-decreasing
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r) {
            std::size_t count = 0;
            for (const auto& i : multi_indices(n, r))
                for (const auto& j : multi_indices(n, r)) {
                    bool ok = i.weakly_increasing();
                    for (int a = 0; ok && a + 1 < r; ++a)
                        if (i[a] == i[a + 1] && j[a] > j[a + 1]) ok = false;
                    if (ok) ++count;
                }
            const auto yp = y_pairs(n, r);
            CHECK(yp.size() == count);
            CHECK(static_cast<long long>(yp.size()) == binom(n * n + r - 1, r));
            for (const auto& p : yp) CHECK(is_y_pair(p.i, p.j));
        }
    CHECK(y_pairs(1, 4).size() == 1);
    CHECK(y_pairs(2, 1).size() == 4);
}

TEST_CASE("perm basics") {
    const Perm id = Perm::identity(3);
    CHECK(id.lng() == 0);
    const Perm s1 = Perm::simple(1, 3);
    CHECK(s1.lng() == 1);
    const Perm w = Perm({3, 2, 1});
    CHECK(w.lng() == 3);
    CHECK((s1 * s1) == id);
    CHECK(w.inverse() == w);
    CHECK_THROWS_AS(Perm({1, 1, 2}), std::invalid_argument);

    // reduced words multiply back, exhaustively for r = 4
    for (const auto& p : SymmetricGroup::elements(4)) {
        const auto word = SymmetricGroup::reduced_word(p);
        CHECK(static_cast<int>(word.size()) == p.lng());
        Perm prod = Perm::identity(4);
        for (int a : word) prod = prod * Perm::simple(a, 4);
        CHECK(prod == p);
    }

    // composition convention: (i pi)_a = i_{pi(a)}
    const MultiIndex i({5, 7, 9});
    const Perm pi({2, 3, 1});
    CHECK(apply(i, pi).entries() == std::vector<int>{7, 9, 5});
    for (const auto& a : SymmetricGroup::elements(3))
        for (const auto& b : SymmetricGroup::elements(3))
            CHECK(apply(apply(i, a), b) == apply(i, a * b));
}

TEST_CASE("dist_reps") {
    // lam = (1,...,1): all of Sigma_r
    CHECK(SymmetricGroup::dist_reps(Composition({1, 1, 1})).size() == 6);
    // lam = (r): identity only
    const auto& dr = SymmetricGroup::dist_reps(Composition({3}));
    REQUIRE(dr.size() == 1);
    CHECK(dr[0] == Perm::identity(3));

    // r=3, lam=(2,1): brute-force coset split
    const Composition lam({2, 1});
    const auto& reps = SymmetricGroup::dist_reps(lam);
    CHECK(reps.size() == 3);
    const auto& sub = SymmetricGroup::young_subgroup(lam);
    std::set<Perm> covered;
    for (const auto& d : reps) {
        for (const auto& pi : sub) {
            const Perm el = pi * d;
            CHECK(!covered.count(el));
            covered.insert(el);
            // distinguished representative has minimal length in its coset
            CHECK(d.lng() <= el.lng());
        }
    }
    CHECK(covered.size() == 6);

    // |D_lam| = multinomial, n,r <= 4
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r)
            for (const auto& lam2 : compositions(n, r))
                CHECK(static_cast<long long>(SymmetricGroup::dist_reps(lam2).size()) ==
                      multinomial(lam2));
}

TEST_CASE("double_reps") {
    CHECK(SymmetricGroup::double_reps(Composition({3}), Composition({3})).size() == 1);
    CHECK(SymmetricGroup::double_reps(Composition({2, 1}), Composition({1, 1, 1})).size() == 3);

    // |D_{omega,mu}| = multinomial(mu)
    for (const auto& mu : compositions(3, 3))
        CHECK(static_cast<long long>(
                  SymmetricGroup::double_reps(Composition({1, 1, 1}), mu).size()) ==
              multinomial(mu));

    // |D_{lam,mu}| equals the number of row-semistandard lam-tableaux of content mu
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r)
            for (const auto& lam : compositions(n, r))
                for (const auto& mu : compositions(n, r)) {
                    std::size_t rss = 0;
                    for (const auto& j : multi_indices(n, r))
                        if (j.content(n) == mu && tableau_of(lam, j).is_row_semistandard()) ++rss;
                    CHECK(SymmetricGroup::double_reps(lam, mu).size() == rss);
                }
}

TEST_CASE("y_to_dcoset") {
    // j = l(mu) gives the identity
    for (const auto& lam : compositions(3, 3))
        for (const auto& mu : compositions(3, 3)) {
            const MultiIndex lmu = l_of(mu);
            if (!is_y_pair(l_of(lam), lmu)) continue;
            CHECK(y_to_dcoset(lam, lmu) == Perm::identity(3));
        }
    // r=2, lam=mu=(1,1), j=(2,1) -> the transposition
    CHECK(y_to_dcoset(Composition({1, 1}), MultiIndex({2, 1})) == Perm({2, 1}));

    // bijectivity n=r<=3: image cardinality = |D_{lam,mu}| for all lam, mu
    for (int nr = 2; nr <= 3; ++nr)
        for (const auto& lam : compositions(nr, nr))
            for (const auto& mu : compositions(nr, nr)) {
                std::set<Perm> image;
                std::size_t domain = 0;
                for (const auto& j : multi_indices(nr, nr)) {
                    if (!(j.content(nr) == mu) || !is_y_pair(l_of(lam), j)) continue;
                    ++domain;
                    const Perm d = y_to_dcoset(lam, j);
                    image.insert(d);
                    // the image is a distinguished double coset representative
                    const auto& reps = SymmetricGroup::double_reps(lam, mu);
                    CHECK(std::find(reps.begin(), reps.end(), d) != reps.end());
                    // round trip through the inverse correspondence
                    CHECK(dcoset_to_y(lam, mu, d) == j);
                }
                CHECK(image.size() == domain);
                CHECK(image.size() == SymmetricGroup::double_reps(lam, mu).size());
            }

    CHECK_THROWS_AS(y_to_dcoset(Composition({1, 1}), MultiIndex({1, 1})), std::invalid_argument);
}

TEST_CASE("tableau predicates") {
    // j = l(lam): row semistandard and ascending
    for (const auto& lam : compositions(3, 4)) {
        const Tableau t = tableau_of(lam, l_of(lam));
        CHECK(t.is_row_semistandard());
        CHECK(t.is_ascending());
    }
    const Composition lam({2, 1});
    const Tableau a = tableau_of(lam, MultiIndex({1, 1, 2}));
    CHECK(a.is_row_semistandard());
    CHECK(a.is_ascending());
    const Tableau b = tableau_of(lam, MultiIndex({2, 2, 1}));
    CHECK(b.is_row_semistandard());
    CHECK_FALSE(b.is_ascending());
    // row semistandard iff (l(lam), j) is a Y pair
    for (const auto& j : multi_indices(2, 3))
        CHECK(tableau_of(lam, j).is_row_semistandard() == is_y_pair(l_of(lam), j));
    CHECK_THROWS_AS(tableau_of(lam, MultiIndex({1, 2})), std::invalid_argument);
}

TEST_CASE("chains and omega_plus") {
    // n=r=2: chains above (1,1) of length 1
    const Composition lam11({1, 1});
    const auto ch = chains(lam11, 1);
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].compositions[0] == Composition({2, 0}));

    // Omega^+_1((1,1),(2,0)) = {((1,1),(1,2))}
    const auto om = omega_plus(lam11, Composition({2, 0}), 1);
    REQUIRE(om.size() == 1);
    CHECK(om[0][0].i == MultiIndex({1, 1}));
    CHECK(om[0][0].j == MultiIndex({1, 2}));

    // dominance-maximal lambda has no chains
    CHECK(chains(Composition({2, 0}), 1).empty());
    CHECK(chains(Composition({3, 0, 0}), 1).empty());
    // k = 0: the single empty chain
    CHECK(chains(lam11, 0).size() == 1);
    CHECK(chains(lam11, 0)[0].compositions.empty());

    // strictness and degree preservation
    for (const auto& lam : compositions(3, 3))
        for (int k = 1; k <= 3; ++k)
            for (const auto& c : chains(lam, k)) {
                REQUIRE(c.compositions.size() == static_cast<std::size_t>(k));
                for (std::size_t t = 0; t + 1 < c.compositions.size(); ++t)
                    CHECK(strictly_dominates(c.compositions[t], c.compositions[t + 1]));
                CHECK(strictly_dominates(c.compositions.back(), lam));
            }

    // Omega^+ empty unless mu strictly dominates lam
    for (const auto& lam : compositions(2, 3))
        for (const auto& mu : compositions(2, 3))
            if (!strictly_dominates(mu, lam))
                for (int k = 1; k <= 2; ++k) CHECK(omega_plus(lam, mu, k).empty());
}

TEST_CASE("b_of") {
    // dominant weights have b = 0
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= 4; ++r)
            for (const auto& lam : compositions(n, r))
                if (lam.is_partition()) CHECK(b_of(lam) == 0);
    CHECK(b_of(Composition({0, 1})) == 0);  // difference -1
    CHECK(b_of(Composition({0, 2})) == 1);
    CHECK(b_of(Composition({1, 3})) == 1);
    // (0,3): both intermediate weights (1,2) and (2,1) have b = 0
    CHECK(b_of(Composition({0, 3})) == 1);
    // (0,0,4): descent at j=2 gives 1 + max over (0,t,4-t); (0,2,2) costs 1
    CHECK(b_of(Composition({0, 0, 4})) == 2);

    // b(lam) <= deg(lam) - l(lam) for all lam in Lambda(n,r), n,r <= 6
    for (int n = 1; n <= 6; ++n)
        for (int r = 0; r <= 6; ++r)
            for (const auto& lam : compositions(n, r))
                CHECK(b_of(lam) <= lam.degree() - lam.length());

    // subtracting 1 from every nonzero leading part preserves b
    for (int n = 2; n <= 5; ++n)
        for (int r = 2; r <= 6; ++r)
            for (const auto& lam : compositions(n, r)) {
                int m = 0;
                while (m < n && lam[m] != 0) ++m;
                bool tail_zero = true;
                for (int a = m; a < n; ++a)
                    if (lam[a] != 0) tail_zero = false;
                if (!tail_zero || m == 0) continue;
                std::vector<int> parts = lam.parts();
                for (int a = 0; a < m; ++a) --parts[a];
                CHECK(b_of(lam) == b_of(Composition(parts)));
            }
}

TEST_CASE("tableau counting oracles") {
    // single row: multisets
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 4; ++r)
            CHECK(ssyt_count(Composition({r}), n) == binom(n + r - 1, r));
    CHECK(ssyt_count(Composition({2, 1}), 3) == 8);
    CHECK(syt_count(Composition({2, 1})) == 2);
    CHECK(syt_count(Composition({1, 1, 1})) == 1);
    CHECK(syt_count(Composition({2, 2})) == 2);
    CHECK(syt_count(Composition({3, 1})) == 3);
    CHECK(syt_count(Composition({2, 1, 1})) == 3);
    CHECK(ssyt_count(Composition({1, 1}), 2) == 1);
    CHECK(ssyt_count(Composition({2, 0}), 2) == 3);
    CHECK_THROWS_AS(ssyt_count(Composition({1, 2}), 2), std::invalid_argument);
}

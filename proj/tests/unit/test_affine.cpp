#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kleinorb/affine.hpp"

using namespace kleinorb;

namespace {

using R = Rational;
using Ops = VermaOps<R>;

Pbw<R> basis_vec(const Term& t) {
    Pbw<R> v;
    v.emplace(t, R(1));
    return v;
}

// partition numbers, for the level-1 lattice character oracle
long partitions(int n) {
    static std::vector<long> p{1};
    while (static_cast<int>(p.size()) <= n) {
        int m = static_cast<int>(p.size());
        long total = 0;
        // pentagonal number recurrence
        for (int j = 1;; ++j) {
            int g1 = j * (3 * j - 1) / 2;
            int g2 = j * (3 * j + 1) / 2;
            if (g1 > m && g2 > m) break;
            long sgn = (j % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sgn * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sgn * p[static_cast<std::size_t>(m - g2)];
        }
        p.push_back(total);
    }
    return p[static_cast<std::size_t>(n)];
}

// graded dimension of the level-1 vacuum module from the lattice realization:
// sum over n of p(d - n^2)
long lattice_char_dim(int d) {
    long total = 0;
    for (int n = -8; n <= 8; ++n)
        if (d - n * n >= 0) total += partitions(d - n * n);
    return total;
}

}  // namespace

TEST_CASE("commutator table", "[affine]") {
    auto c = commutator(Mode{Gen::E, 0}, Mode{Gen::F, 0});
    CHECK(c.coeff == 1);
    CHECK(c.mode.g == Gen::H);
    CHECK(c.mode.n == 0);
    CHECK(c.central_k_factor == 0);

    c = commutator(Mode{Gen::E, 1}, Mode{Gen::F, -1});
    CHECK(c.coeff == 1);
    CHECK(c.mode.g == Gen::H);
    CHECK(c.mode.n == 0);
    CHECK(c.central_k_factor == 1);  // + 1 * <e,f> * k = k

    c = commutator(Mode{Gen::H, 1}, Mode{Gen::H, -1});
    CHECK(c.coeff == 0);
    CHECK(c.central_k_factor == 2);  // 2k

    c = commutator(Mode{Gen::E, 1}, Mode{Gen::E, -1});
    CHECK(c.coeff == 0);
    CHECK(c.central_k_factor == 0);
}

TEST_CASE("act matches the commutator on random pairs", "[affine]") {
    Ops ops{3, 2};
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick_n(-2, 2);
    std::uniform_int_distribution<int> pick_g(0, 2);
    std::uniform_int_distribution<int> pick_j(0, 2);

    for (int trial = 0; trial < 80; ++trial) {
        Mode x{static_cast<Gen>(pick_g(rng)), pick_n(rng)};
        Mode y{static_cast<Gen>(pick_g(rng)), pick_n(rng)};
        Monomial mono;
        if (trial % 2) mono.modes.push_back(Mode{static_cast<Gen>(pick_g(rng)), -1 - trial % 2});
        Term t{mono, pick_j(rng)};
        Pbw<R> v = basis_vec(t);

        Pbw<R> lhs = ops.apply(x, ops.apply(y, v));
        Pbw<R> tmp = ops.apply(y, ops.apply(x, v));
        for (const auto& [term, coeff] : tmp) pbw_add(lhs, term, -coeff);

        Pbw<R> rhs;
        auto c = commutator(x, y);
        if (c.coeff != 0) pbw_axpy(rhs, ops.apply(c.mode, v), R(c.coeff));
        if (c.central_k_factor != 0) pbw_axpy(rhs, v, R(c.central_k_factor) * R(ops.k));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("act examples", "[affine]") {
    SECTION("creation on the vacuum is already ordered") {
        Ops ops{2, 0};
        Pbw<R> v = Ops::top(0, 0);
        Pbw<R> w = ops.apply(Mode{Gen::E, -1}, v);
        REQUIRE(w.size() == 1);
        const auto& [t, c] = *w.begin();
        CHECK(t.mono.modes.size() == 1);
        CHECK(t.mono.modes[0].g == Gen::E);
        CHECK(t.mono.modes[0].n == -1);
        CHECK(c == R(1));
    }
    SECTION("e(1) f(-1) vacuum = k vacuum") {
        for (long k = 1; k <= 4; ++k) {
            Ops ops{k, 0};
            Pbw<R> w = ops.apply(Mode{Gen::E, 1}, ops.apply(Mode{Gen::F, -1}, Ops::top(0, 0)));
            REQUIRE(w.size() == 1);
            CHECK(w.begin()->second == R(k));
            CHECK(w.begin()->first.mono.modes.empty());
        }
    }
    SECTION("h(0) reads the charge") {
        Ops ops{3, 3};
        Pbw<R> fv = ops.apply(Mode{Gen::F, -1}, Ops::top(3, 0));
        Pbw<R> w = ops.apply(Mode{Gen::H, 0}, fv);
        REQUIRE(w.size() == 1);
        CHECK(w.begin()->second == R(3 - 2));  // charge -2 + i = i - 2
    }
}

TEST_CASE("gram block examples", "[affine]") {
    SECTION("(1,0,1,2): single e(-1) vector of norm k") {
        auto g = gram_matrix(1, 0, 1, 2);
        REQUIRE(g.rows() == 1);
        CHECK(g(0, 0) == R(1));
    }
    SECTION("(k,i,0,i) is the 1x1 identity") {
        for (long k = 1; k <= 3; ++k)
            for (long i = 0; i <= k; ++i) {
                auto g = gram_matrix(k, i, 0, static_cast<int>(i));
                REQUIRE(g.rows() == 1);
                CHECK(g(0, 0) == R(1));
            }
    }
    SECTION("(2,2,1,0): hand-computed 3x3 block of rank 2") {
        // basis order: h(-1)v^{2,1}, e(-1)v^{2,2}, f(-1)v^{2,0}
        auto g = gram_matrix(2, 2, 1, 0);
        REQUIRE(g.rows() == 3);
        CHECK(g(0, 0) == R(8));
        CHECK(g(0, 1) == R(4));
        CHECK(g(0, 2) == R(-4));
        CHECK(g(1, 1) == R(4));
        CHECK(g(1, 2) == R(0));
        CHECK(g(2, 2) == R(4));
        CHECK(rank_bareiss(g) == 2);
        CHECK(rank_gauss(g) == 2);  // independent elimination route
    }
}

TEST_CASE("gram blocks are symmetric and respect selection rules", "[affine]") {
    for (int d = 0; d <= 3; ++d)
        for (int q = -5; q <= 5; ++q) {
            auto basis = cell_basis(1, d, q);
            if ((q - 1) % 2 != 0) CHECK(basis.empty());
            auto g = gram_matrix(2, 1, d, q);
            CHECK(g.rows() == basis.size());
            CHECK(g == g.transpose());
        }
    CHECK(cell_basis(0, 0, 2).empty());  // empty weight space -> 0x0 block
    CHECK(gram_matrix(1, 0, 0, 2).rows() == 0);
}

TEST_CASE("level-1 vacuum graded dimensions match the lattice character", "[affine]") {
    RankCache cache;
    auto dims = irreducible_graded_dims(1, 0, 3, cache);
    REQUIRE(dims.total.size() == 4);
    CHECK(dims.total[0] == 1);
    CHECK(dims.total[1] == 3);
    CHECK(dims.total[2] == 4);
    CHECK(dims.total[3] == 7);
    for (int d = 0; d <= 3; ++d)
        CHECK(dims.total[static_cast<std::size_t>(d)] == lattice_char_dim(d));

    // the singular vector e(-1)^2 |0> dies at level 1
    CHECK(cache.rank(1, 0, 2, 4) == 0);
}

TEST_CASE("adjoint copy at degree one survives for every level", "[affine]") {
    RankCache cache;
    for (long k = 1; k <= 4; ++k) {
        auto dims = irreducible_graded_dims(k, 0, 1, cache);
        CHECK(dims.total[1] == 3);
    }
}

TEST_CASE("top level of L(2,2) is three dimensional", "[affine]") {
    RankCache cache;
    auto dims = irreducible_graded_dims(2, 2, 0, cache);
    CHECK(dims.total[0] == 3);
}

TEST_CASE("Weyl symmetry of graded dimensions", "[affine]") {
    RankCache cache;
    for (long i : {1L, 2L}) {
        auto dims = irreducible_graded_dims(3, i, 3, cache);
        for (const auto& [dq, dim] : dims.dim) CHECK(dim == dims.at(dq.first, -dq.second));
    }
}

TEST_CASE("rank queries reject non-integrable weights", "[affine]") {
    RankCache cache;
    CHECK_THROWS(irreducible_graded_dims(2, 3, 1, cache));
    CHECK_THROWS(irreducible_graded_dims(2, -1, 1, cache));
}

TEST_CASE("dual route: bareiss equals gaussian on gram blocks", "[affine]") {
    for (long k = 1; k <= 2; ++k)
        for (long i = 0; i <= k; ++i)
            for (int d = 0; d <= 3; ++d)
                for (int q = -static_cast<int>(i + 2 * d); q <= static_cast<int>(i + 2 * d);
                     q += 2) {
                    auto g = gram_matrix(k, i, d, q);
                    if (g.rows() == 0) continue;
                    CHECK(rank_bareiss(g) == rank_gauss(g));
                }
}

#include <catch2/catch_amalgamated.hpp>

#include "kleinorb/twist.hpp"

using namespace kleinorb;

namespace {
using R = Rational;
}

TEST_CASE("twisted weight formula", "[twist]") {
    // top vector v^{r,i,i}: d = i(i+2)/(4(k+2)), q = -i gives the closed form
    for (long k = 1; k <= 4; ++k)
        for (long i = 0; i <= k; ++i) {
            R d = lowest_conformal_weight(k, i);
            CHECK(twisted_weight(k, i, d, -i) == twisted_base_weight(k, i));
        }
    CHECK(twisted_base_weight(3, 0) == R(3, 16));  // i=0 top: k/16
    CHECK(twisted_base_weight(2, 1) == R(1, 16));  // k=2, i=1 top
    CHECK(twisted_weight(2, 1, R(0), 0) == R(1, 8));
}

TEST_CASE("twisted mode dictionary", "[twist]") {
    auto h0 = twisted_mode(Gen::H, R(0), 4);
    CHECK(h0.mode.g == Gen::H);
    CHECK(h0.mode.n == 0);
    CHECK(h0.scalar == R(2));  // h(0) + k/2

    auto e_half = twisted_mode(Gen::E, R(1, 2), 4);
    CHECK(e_half.mode.g == Gen::E);
    CHECK(e_half.mode.n == 1);
    CHECK(e_half.scalar.is_zero());

    auto f_mhalf = twisted_mode(Gen::F, R(-1, 2), 4);
    CHECK(f_mhalf.mode.g == Gen::F);
    CHECK(f_mhalf.mode.n == -1);

    CHECK_THROWS(twisted_mode(Gen::E, R(1), 4));  // wrong parity
    CHECK_THROWS(twisted_mode(Gen::H, R(1, 2), 4));
}

TEST_CASE("dictionary reproduces the twisted bracket", "[twist]") {
    // [e_a, f_b] = h_{a+b} + a k delta_{a+b,0} on test vectors
    long k = 3, i = 2;
    VermaOps<R> ops{k, i};
    std::vector<Pbw<R>> samples;
    samples.push_back(VermaOps<R>::top(i, 1));
    samples.push_back(ops.apply(Mode{Gen::F, -1}, VermaOps<R>::top(i, 0)));
    samples.push_back(ops.apply(Mode{Gen::H, -2}, VermaOps<R>::top(i, 2)));

    for (int na = -3; na <= 3; na += 2)
        for (int nb = -3; nb <= 3; nb += 2) {
            R a(na, 2), b(nb, 2);
            for (const auto& v : samples) {
                Pbw<R> lhs =
                    apply_twisted_mode(ops, Gen::E, a, apply_twisted_mode(ops, Gen::F, b, v));
                Pbw<R> rl =
                    apply_twisted_mode(ops, Gen::F, b, apply_twisted_mode(ops, Gen::E, a, v));
                for (const auto& [t, c] : rl) pbw_add(lhs, t, -c);

                Pbw<R> rhs;
                R sum = a + b;
                if (sum.is_integer()) {
                    rhs = apply_twisted_mode(ops, Gen::H, sum, v);
                    if (sum.is_zero()) pbw_axpy(rhs, v, a * R(k));
                }
                CHECK(lhs == rhs);
            }
        }
}

TEST_CASE("h_0 spectrum on the lowest cell", "[twist]") {
    // (h(0) + k/2) v^{i,i} = (k/2 - i) v^{i,i}; zero iff i = k/2
    for (long k = 2; k <= 4; k += 2)
        for (long i = 0; i <= k; ++i) {
            VermaOps<R> ops{k, i};
            Pbw<R> v = VermaOps<R>::top(i, i);
            Pbw<R> hv = apply_twisted_mode(ops, Gen::H, R(0), v);
            Pbw<R> expect;
            pbw_axpy(expect, v, R(k, 2) - R(i));
            CHECK(hv == expect);
        }
}

TEST_CASE("paper identity: twisted h_0 swaps the half-integer doublet", "[twist]") {
    // (h(-1)1)_0 (v^{k/2,k/2-1} +- f_{-1/2} v^{k/2,k/2}) = 2 (v^{k/2,k/2-1} -+ ...)
    for (long k = 2; k <= 6; k += 2) {
        long i = k / 2;
        VermaOps<R> ops{k, i};
        Pbw<R> x = VermaOps<R>::top(i, i - 1);
        Pbw<R> y = ops.apply(Mode{Gen::F, -1}, VermaOps<R>::top(i, i));
        for (int s : {1, -1}) {
            Pbw<R> v = x;
            pbw_axpy(v, y, R(s));
            Pbw<R> hv = apply_twisted_mode(ops, Gen::H, R(0), v);
            Pbw<R> expect;
            pbw_axpy(expect, x, R(2));
            pbw_axpy(expect, y, R(-2 * s));
            CHECK(hv == expect);
        }
    }
}

TEST_CASE("stabilizers", "[twist]") {
    CHECK(stabilizer(4, 1, 1) == std::vector<Klein>{Klein::id, Klein::s1});
    CHECK(stabilizer(4, 2, 1) == std::vector<Klein>{Klein::id, Klein::s1, Klein::s2, Klein::s3});
    for (long i = 0; i <= 3; ++i)
        CHECK(stabilizer(3, i, 2) == std::vector<Klein>{Klein::id, Klein::s2});
}

TEST_CASE("orbit symmetry of twisted lowest weights", "[twist]") {
    for (long k = 1; k <= 8; ++k)
        for (long i = 0; i <= k; ++i)
            CHECK(twisted_base_weight(k, i) == twisted_base_weight(k, k - i));
}

TEST_CASE("twisted components for i != k/2", "[twist]") {
    RankCache ranks;
    for (long k = 1; k <= 4; ++k)
        for (long i = 0; i <= k; ++i) {
            if (k % 2 == 0 && i == k / 2) continue;
            for (int r = 1; r <= 3; ++r) {
                auto table = twisted_component_dims(k, i, r, 2, ranks);
                REQUIRE_FALSE(table.quartet);
                // plus component: lowest cell dim 1 at offset 0
                CHECK(table.dims[0].at(0) == 1);
                CHECK(*table.lowest(0) == twisted_base_weight(k, i));
                // minus component: lowest at offset exactly 1/2
                auto low = table.lowest(1);
                REQUIRE(low.has_value());
                CHECK(*low == twisted_base_weight(k, i) + R(1, 2));
                long expected = (i == 0 || i == k) ? 1 : 2;
                CHECK(table.dims[1].at(1) == expected);
            }
        }
}

TEST_CASE("twisted quartet at i = k/2", "[twist]") {
    RankCache ranks;
    for (long k = 2; k <= 6; k += 2) {
        long i = k / 2;
        auto table = twisted_component_dims(k, i, 1, 2, ranks);
        REQUIRE(table.quartet);
        // k/(8(k+2)) is the closed lowest-weight formula at i = k/2
        CHECK(table.base == R(k, 8 * (k + 2)));

        // offsets {0, 1, 1/2, 1/2} for components (0),(1),(2),(3)
        CHECK(*table.lowest(0) == table.base);
        CHECK(*table.lowest(1) == table.base + R(1));
        CHECK(*table.lowest(2) == table.base + R(1, 2));
        CHECK(*table.lowest(3) == table.base + R(1, 2));

        CHECK(table.dims[0].at(0) == 1);
        CHECK(table.dims[1].at(2) == (k == 2 ? 1 : 2));
        CHECK(table.dims[2].at(1) == 1);
        CHECK(table.dims[3].at(1) == 1);
    }
}

TEST_CASE("quartet involution descends to a form-preserving involution", "[twist]") {
    long k = 4, i = 2;
    VermaOps<R> ops{k, i};
    for (int two_tau = 0; two_tau <= 3; ++two_tau) {
        for (int parity = 0; parity <= 2; parity += 2) {
            std::vector<Term> basis;
            std::map<Term, std::size_t> index;
            std::vector<std::pair<int, int>> used;
            for (const auto& [d, q] : twisted_level_cells(i, two_tau)) {
                if (((q + i) % 4 + 4) % 4 != parity) continue;
                for (const auto& t : cell_basis(i, d, q)) {
                    index.emplace(t, basis.size());
                    basis.push_back(t);
                }
                used.emplace_back(d, q);
            }
            if (basis.empty()) continue;
            Matrix<R> gram(basis.size(), basis.size());
            for (const auto& [d, q] : used) {
                auto cb = cell_basis(i, d, q);
                auto g = gram_matrix(k, i, d, q);
                std::size_t off = index.at(cb.front());
                for (std::size_t a = 0; a < cb.size(); ++a)
                    for (std::size_t b = 0; b < cb.size(); ++b) gram(off + a, off + b) = g(a, b);
            }
            Matrix<R> qmat(basis.size(), basis.size());
            for (std::size_t c = 0; c < basis.size(); ++c) {
                Pbw<R> img = quartet_involution(ops, basis[c]);
                for (const auto& [t, coeff] : img) qmat(index.at(t), c) = coeff;
            }
            // on the quotient of the level space the map squares to one and
            // preserves the (now nondegenerate) form
            auto qq = quartet_quotient_action(gram, qmat);  // throws if not involutive
            CHECK(qq.action.rows() == rank_bareiss(gram));
            CHECK(qq.action.transpose() * qq.form * qq.action == qq.form);
            // raw map sends the radical into the radical
            auto ker = kernel_basis(gram);
            if (ker.cols() > 0) CHECK((gram * (qmat * ker)).is_zero());
        }
    }
}

TEST_CASE("quartet involution on explicit vectors", "[twist]") {
    // Q swaps e_{-1/2} v = v^{i,i-1} and f_{-1/2} v = f(-1) v^{i,i}
    long k = 2, i = 1;
    VermaOps<R> ops{k, i};
    Term t_top1{Monomial{}, 0};  // v^{1,0}
    Pbw<R> img = quartet_involution(ops, t_top1);
    Pbw<R> expect = ops.apply(Mode{Gen::F, -1}, VermaOps<R>::top(1, 1));
    CHECK(img == expect);

    Term t_f{Monomial{{Mode{Gen::F, -1}}}, 1};
    img = quartet_involution(ops, t_f);
    CHECK(img == VermaOps<R>::top(1, 0));
}

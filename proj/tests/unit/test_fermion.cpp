#include <catch2/catch_amalgamated.hpp>

#include "kleinorb/fermion.hpp"

using namespace kleinorb;

namespace {

const GaussRational I = GaussRational::i();

FockOps::Vec state_of(const FockOps::Key& k) {
    FockOps::Vec v;
    v.emplace(k, GaussRational(1));
    return v;
}

}  // namespace

TEST_CASE("psi on the vacuum", "[fermion]") {
    FockOps ops(4);
    auto vac = FockOps::vacuum();

    CHECK(ops.apply_psi(1, 1, 1, vac).empty());  // annihilates the vacuum

    auto one = ops.apply_psi(1, 1, -1, vac);
    REQUIRE(one.size() == 1);
    CHECK(ops.apply_psi(1, 1, -1, one).empty());  // Pauli exclusion

    auto back = ops.apply_psi(1, 1, 1, one);
    REQUIRE(back.size() == 1);
    CHECK(back.begin()->first.empty());
    CHECK(back.begin()->second == GaussRational(1));
}

TEST_CASE("anticommutation with signs", "[fermion]") {
    FockOps ops(4);
    auto vac = FockOps::vacuum();
    // psi_{11}(-1/2) psi_{12}(-1/2) |0> = - psi_{12}(-1/2) psi_{11}(-1/2) |0>
    auto a = ops.apply_psi(1, 1, -1, ops.apply_psi(1, 2, -1, vac));
    auto b = ops.apply_psi(1, 2, -1, ops.apply_psi(1, 1, -1, vac));
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a.begin()->first == b.begin()->first);
    CHECK(a.begin()->second == -b.begin()->second);
}

TEST_CASE("w^3(-1) builds the paired state sum", "[fermion]") {
    FockOps ops(4);
    auto w3 = ops.bilinear(3, -1, FockOps::vacuum());
    REQUIRE(w3.size() == 4);
    for (int row = 1; row <= 4; ++row) {
        FockOps::Key key{ops.code(row, 1, 0), ops.code(row, 2, 0)};
        auto it = w3.find(key);
        REQUIRE(it != w3.end());
        CHECK(it->second == GaussRational(1));
    }
}

TEST_CASE("level examples at m=4", "[fermion]") {
    FockOps ops(4);
    auto vac = FockOps::vacuum();

    SECTION("[e(1), f(-1)] = h(0) + 8 on the vacuum") {
        auto ef = ops.current(Gen::E, 1, ops.current(Gen::F, -1, vac));
        auto fe = ops.current(Gen::F, -1, ops.current(Gen::E, 1, vac));
        CHECK(fe.empty());
        REQUIRE(ef.size() == 1);
        CHECK(ef.begin()->first.empty());
        CHECK(ef.begin()->second == GaussRational(8));
    }
    SECTION("[h(1), h(-1)] = 16 on the vacuum") {
        auto hh = ops.current(Gen::H, 1, ops.current(Gen::H, -1, vac));
        REQUIRE(hh.size() == 1);
        CHECK(hh.begin()->second == GaussRational(16));
    }
    SECTION("[h(0), e(-1)] = 2 e(-1) on the vacuum") {
        auto he = ops.current(Gen::H, 0, ops.current(Gen::E, -1, vac));
        auto ev = ops.current(Gen::E, -1, vac);
        // h(0) e(-1)|0> = 2 e(-1)|0> since h(0)|0> = 0
        FockOps::Vec expect;
        for (const auto& [key, c] : ev) expect.emplace(key, GaussRational(2) * c);
        CHECK(he == expect);
    }
    SECTION("[e(0), f(0)] = h(0) on degree-one states") {
        for (const auto& key : ops.basis(2)) {
            auto v = state_of(key);
            auto lhs = ops.current(Gen::E, 0, ops.current(Gen::F, 0, v));
            auto ba = ops.current(Gen::F, 0, ops.current(Gen::E, 0, v));
            for (const auto& [kk, cc] : ba) {
                auto [it, fresh] = lhs.try_emplace(kk, -cc);
                if (!fresh) {
                    it->second -= cc;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            }
            CHECK(lhs == ops.current(Gen::H, 0, v));
        }
    }
}

TEST_CASE("sigma prime matches sigma on the sl2 vectors", "[fermion]") {
    FockOps ops(4);
    auto rep = k_action_check(ops);
    CHECK(rep.pass);

    // spot checks straight from the sign rule
    auto vac = FockOps::vacuum();
    auto h = ops.current(Gen::H, -1, vac);
    CHECK(ops.klein_prime(1, h) == h);  // sigma'_1 fixes h
    auto e = ops.current(Gen::E, -1, vac);
    auto f = ops.current(Gen::F, -1, vac);
    CHECK(ops.klein_prime(2, e) == f);  // sigma'_2 swaps e and f
    CHECK(ops.klein_prime(2, f) == e);
    auto w3 = ops.bilinear(3, -1, vac);
    CHECK(ops.klein_prime(3, w3) == w3);  // sigma'_3 fixes w^3
}

TEST_CASE("state counting at m=4", "[fermion]") {
    FockOps ops(4);
    auto states = ops.basis(2);
    long d1 = 0, d2 = 0;
    for (const auto& key : states) {
        int d = FockOps::two_degree(key, 4);
        if (d == 1) ++d1;
        if (d == 2) ++d2;
    }
    CHECK(d1 == 12);
    CHECK(d2 == 66);
}

TEST_CASE("fermion verification report at reduced depth", "[fermion]") {
    auto rep = fermion_verify(4, 2);
    for (const auto& c : rep.checks) {
        INFO(c.name << " " << c.counterexample);
        CHECK(c.pass);
    }
    CHECK(rep.ok());
    CHECK_THROWS(fermion_verify(3, 2));
}

// Truncated Fock space for the rank-3m Clifford algebra: fermionic states,
// the quadratic sl2 currents at level 2m, and the operator-identity checks
// behind the fermionic realization.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kleinorb/affine.hpp"
#include "kleinorb/rational.hpp"
#include "kleinorb/sl2.hpp"

namespace kleinorb {

// Basis state of the Fock space: a strictly increasing list of creation-mode
// codes. A code packs (t, col, row) with mode -(2t+1)/2, so ascending codes
// run through modes of descending r, then columns, then rows.
class FockOps {
public:
    using Key = std::vector<std::uint16_t>;
    using Vec = std::map<Key, GaussRational>;

    explicit FockOps(long m_) : m(m_) {}

    long m;

    std::uint16_t code(int row, int col, int t) const {
        return static_cast<std::uint16_t>((static_cast<long>(t) * 3 + (col - 1)) * m + (row - 1));
    }

    static Vec vacuum() {
        Vec v;
        v.emplace(Key{}, GaussRational(1));
        return v;
    }

    static int two_degree(const Key& s, long m) {
        int d = 0;
        for (auto c : s) d += 2 * (c / (3 * m)) + 1;
        return d;
    }

    // psi_{row,col}(r) with r = two_r/2 on a single signed state; returns
    // false when the result is zero.
    bool apply_psi_key(int row, int col, int two_r, const Key& in, Key& out, int& sign) const {
        if (two_r % 2 == 0) throw std::invalid_argument("apply_psi: mode must be half-integral");
        int t = (std::abs(two_r) - 1) / 2;
        std::uint16_t c = code(row, col, t);
        if (two_r < 0) {
            // creation: insert unless excluded
            std::size_t p = 0;
            while (p < in.size() && in[p] < c) ++p;
            if (p < in.size() && in[p] == c) return false;
            out = in;
            out.insert(out.begin() + static_cast<long>(p), c);
            sign = (p % 2 == 0) ? 1 : -1;
            return true;
        }
        // annihilation: remove the matching label
        std::size_t p = 0;
        while (p < in.size() && in[p] != c) ++p;
        if (p == in.size()) return false;
        out = in;
        out.erase(out.begin() + static_cast<long>(p));
        sign = (p % 2 == 0) ? 1 : -1;
        return true;
    }

    Vec apply_psi(int row, int col, int two_r, const Vec& v) const {
        Vec out;
        Key image;
        int sign;
        for (const auto& [key, coeff] : v) {
            if (!apply_psi_key(row, col, two_r, key, image, sign)) continue;
            auto [it, fresh] = out.try_emplace(image, sign > 0 ? coeff : -coeff);
            if (!fresh) {
                it->second += sign > 0 ? coeff : -coeff;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }

    // w^a(n), the mode-n coefficient of the normal-ordered bilinear
    // sum_row :psi_{row,c1} psi_{row,c2}:, with (c1,c2) = (2,3), (1,3), (1,2).
    Vec bilinear(int a, int n, const Vec& v) const {
        static constexpr int cols[4][2] = {{0, 0}, {2, 3}, {1, 3}, {1, 2}};
        int c1 = cols[a][0], c2 = cols[a][1];
        Vec out;
        Key tmp1, tmp2;
        int s1, s2;
        for (const auto& [key, coeff] : v) {
            int d2 = two_degree(key, m);
            int lo = 2 * n - d2 - 2, hi = d2 + 2;
            for (int two_s = lo | 1; two_s <= hi; two_s += 2) {
                int two_partner = 2 * n - two_s;
                // normal order: a creation on the right of an annihilation
                // swaps with a sign
                bool swapped = (two_partner < 0 && two_s > 0);
                for (int row = 1; row <= m; ++row) {
                    bool ok;
                    int sign;
                    if (!swapped) {
                        ok = apply_psi_key(row, c2, two_partner, key, tmp1, s1) &&
                             apply_psi_key(row, c1, two_s, tmp1, tmp2, s2);
                        sign = s1 * s2;
                    } else {
                        ok = apply_psi_key(row, c1, two_s, key, tmp1, s1) &&
                             apply_psi_key(row, c2, two_partner, tmp1, tmp2, s2);
                        sign = -s1 * s2;
                    }
                    if (!ok) continue;
                    GaussRational add = sign > 0 ? coeff : -coeff;
                    auto [it, fresh] = out.try_emplace(tmp2, add);
                    if (!fresh) {
                        it->second += add;
                        if (it->second.is_zero()) out.erase(it);
                    }
                }
            }
        }
        return out;
    }

    // h = 2 sqrt(-1) w^1, e = sqrt(-1) w^2 - w^3, f = sqrt(-1) w^2 + w^3
    Vec current(Gen g, int n, const Vec& v) const {
        GaussRational i = GaussRational::i();
        Vec out;
        auto axpy = [&](const Vec& src, const GaussRational& scale) {
            for (const auto& [key, coeff] : src) {
                GaussRational add = scale * coeff;
                auto [it, fresh] = out.try_emplace(key, add);
                if (!fresh) {
                    it->second += add;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        };
        switch (g) {
            case Gen::H: axpy(bilinear(1, n, v), GaussRational(2) * i); break;
            case Gen::E:
                axpy(bilinear(2, n, v), i);
                axpy(bilinear(3, n, v), GaussRational(-1));
                break;
            case Gen::F:
                axpy(bilinear(2, n, v), i);
                axpy(bilinear(3, n, v), GaussRational(1));
                break;
        }
        return out;
    }

    // sigma'_l: sign (-1)^{number of psi factors with column index l}
    Vec klein_prime(int l, const Vec& v) const {
        Vec out;
        for (const auto& [key, coeff] : v) {
            int count = 0;
            for (auto c : key)
                if (static_cast<int>((c / m) % 3) + 1 == l) ++count;
            out.emplace(key, count % 2 == 0 ? coeff : -coeff);
        }
        return out;
    }

    // all states of two_degree <= two_d (finitely many since modes exclude)
    std::vector<Key> basis(int two_d) const {
        std::vector<Key> out;
        Key cur;
        auto rec = [&](auto&& self, std::uint16_t next, int remaining) -> void {
            out.push_back(cur);
            for (std::uint16_t c = next;; ++c) {
                int w = 2 * (c / (3 * m)) + 1;
                if (w > remaining) break;
                cur.push_back(c);
                self(self, static_cast<std::uint16_t>(c + 1), remaining - w);
                cur.pop_back();
            }
        };
        rec(rec, 0, two_d);
        return out;
    }
};

struct FermionCheck {
    std::string name;
    bool pass = false;
    std::string counterexample;  // first failing state, if any
};

struct FermionReport {
    long m = 0;
    int two_depth = 0;
    std::vector<FermionCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

namespace detail {

inline std::string key_str(const FockOps& ops, const FockOps::Key& key) {
    if (key.empty()) return "|0>";
    std::string s;
    for (auto c : key) {
        int t = c / (3 * ops.m);
        int col = static_cast<int>((c / ops.m) % 3) + 1;
        int row = static_cast<int>(c % ops.m) + 1;
        s += "psi_{" + std::to_string(row) + std::to_string(col) + "}(-" +
             std::to_string(2 * t + 1) + "/2)";
    }
    return s + "|0>";
}

inline bool vec_eq(const FockOps::Vec& a, const FockOps::Vec& b) { return a == b; }

}  // namespace detail

// Clifford anticommutation {psi(r), psi(s)} = delta on every basis state of
// the truncation, over all mode pairs with |two_r| <= max_two_r.
inline FermionCheck clifford_check(const FockOps& ops, int two_d, int max_two_r) {
    FermionCheck out{"clifford anticommutation", true, ""};
    auto states = ops.basis(two_d);
    std::vector<std::tuple<int, int, int>> modes;
    for (int row = 1; row <= ops.m; ++row)
        for (int col = 1; col <= 3; ++col)
            for (int two_r = -max_two_r; two_r <= max_two_r; two_r += 2)
                modes.emplace_back(row, col, two_r);
    for (const auto& [r1, c1, t1] : modes)
        for (const auto& [r2, c2, t2] : modes) {
            bool delta = (r1 == r2 && c1 == c2 && t1 + t2 == 0);
            for (const auto& key : states) {
                FockOps::Vec v;
                v.emplace(key, GaussRational(1));
                FockOps::Vec lhs = ops.apply_psi(r1, c1, t1, ops.apply_psi(r2, c2, t2, v));
                FockOps::Vec ba = ops.apply_psi(r2, c2, t2, ops.apply_psi(r1, c1, t1, v));
                for (const auto& [kk, cc] : ba) {
                    auto [it, fresh] = lhs.try_emplace(kk, cc);
                    if (!fresh) {
                        it->second += cc;
                        if (it->second.is_zero()) lhs.erase(it);
                    }
                }
                FockOps::Vec expect;
                if (delta) expect = v;
                if (!detail::vec_eq(lhs, expect)) {
                    out.pass = false;
                    if (out.counterexample.empty())
                        out.counterexample = detail::key_str(ops, key);
                }
            }
        }
    return out;
}

// [w^1, w^2] = w^3 and cyclic, as zero-mode operator identities.
inline FermionCheck w_bracket_check(const FockOps& ops, int two_d) {
    FermionCheck out{"cyclic w brackets", true, ""};
    auto states = ops.basis(two_d);
    static constexpr int triple[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
    for (const auto* tr : triple) {
        for (const auto& key : states) {
            FockOps::Vec v;
            v.emplace(key, GaussRational(1));
            FockOps::Vec lhs = ops.bilinear(tr[0], 0, ops.bilinear(tr[1], 0, v));
            FockOps::Vec ba = ops.bilinear(tr[1], 0, ops.bilinear(tr[0], 0, v));
            FockOps::Vec rhs = ops.bilinear(tr[2], 0, v);
            for (const auto& [kk, cc] : ba) {
                auto [it, fresh] = lhs.try_emplace(kk, -cc);
                if (!fresh) {
                    it->second -= cc;
                    if (it->second.is_zero()) lhs.erase(it);
                }
            }
            if (!detail::vec_eq(lhs, rhs)) {
                out.pass = false;
                if (out.counterexample.empty()) out.counterexample = detail::key_str(ops, key);
            }
        }
    }
    return out;
}

// Affine sl2 relations at level 2m for all generator pairs with |s|,|t| <= 1.
inline FermionCheck check_level(const FockOps& ops, int two_d) {
    FermionCheck out{"affine sl2 relations at level 2m", true, ""};
    auto states = ops.basis(two_d);
    long k = 2 * ops.m;
    for (Gen a : {Gen::H, Gen::E, Gen::F})
        for (Gen b : {Gen::H, Gen::E, Gen::F})
            for (int s = -1; s <= 1; ++s)
                for (int t = -1; t <= 1; ++t) {
                    auto cm = commutator(Mode{a, s}, Mode{b, t});
                    for (const auto& key : states) {
                        FockOps::Vec v;
                        v.emplace(key, GaussRational(1));
                        FockOps::Vec lhs = ops.current(a, s, ops.current(b, t, v));
                        FockOps::Vec ba = ops.current(b, t, ops.current(a, s, v));
                        for (const auto& [kk, cc] : ba) {
                            auto [it, fresh] = lhs.try_emplace(kk, -cc);
                            if (!fresh) {
                                it->second -= cc;
                                if (it->second.is_zero()) lhs.erase(it);
                            }
                        }
                        FockOps::Vec rhs;
                        if (cm.coeff != 0) {
                            rhs = ops.current(cm.mode.g, cm.mode.n, v);
                            if (cm.coeff != 1) {
                                for (auto& [kk, cc] : rhs) cc = GaussRational(cm.coeff) * cc;
                            }
                        }
                        if (cm.central_k_factor != 0) {
                            GaussRational central(Rational(cm.central_k_factor * k));
                            auto [it, fresh] = rhs.try_emplace(key, central);
                            if (!fresh) {
                                it->second += central;
                                if (it->second.is_zero()) rhs.erase(it);
                            }
                        }
                        if (!detail::vec_eq(lhs, rhs)) {
                            out.pass = false;
                            if (out.counterexample.empty())
                                out.counterexample = detail::key_str(ops, key);
                        }
                    }
                }
    return out;
}

// sigma'_1, sigma'_2 restrict to sigma_1, sigma_2 on the realized sl2 vectors.
inline FermionCheck k_action_check(const FockOps& ops) {
    FermionCheck out{"klein action on the sl2 vectors", true, ""};
    FockOps::Vec vac = FockOps::vacuum();
    std::map<Gen, FockOps::Vec> vec;
    for (Gen g : {Gen::H, Gen::E, Gen::F}) vec[g] = ops.current(g, -1, vac);

    auto scaled = [&](const FockOps::Vec& v, int s) {
        FockOps::Vec out2 = v;
        if (s < 0)
            for (auto& [kk, cc] : out2) cc = -cc;
        return out2;
    };

    for (int l = 1; l <= 3; ++l) {
        Klein g = static_cast<Klein>(l);
        for (Gen a : {Gen::H, Gen::E, Gen::F}) {
            Sl2 image = sigma(g, a == Gen::H ? sl2_h() : a == Gen::E ? sl2_e() : sl2_f());
            // sigma maps basis vectors to +-basis vectors; read the image off
            FockOps::Vec expect;
            auto add = [&](const FockOps::Vec& v, const GaussRational& c) {
                if (c.is_zero()) return;
                for (const auto& [kk, cc] : v) {
                    auto [it, fresh] = expect.try_emplace(kk, c * cc);
                    if (!fresh) {
                        it->second += c * cc;
                        if (it->second.is_zero()) expect.erase(it);
                    }
                }
            };
            add(vec[Gen::H], image.h);
            add(vec[Gen::E], image.e);
            add(vec[Gen::F], image.f);
            if (!detail::vec_eq(ops.klein_prime(l, vec[a]), expect)) {
                out.pass = false;
                out.counterexample = "sigma'_" + std::to_string(l);
            }
        }
        (void)scaled;
    }

    // explicit sign rule check: sigma'_3 fixes the w^3 vector
    FockOps::Vec w3 = ops.bilinear(3, -1, vac);
    if (!detail::vec_eq(ops.klein_prime(3, w3), w3)) {
        out.pass = false;
        out.counterexample = "sigma'_3 on w^3";
    }
    return out;
}

// dim of half-integral degrees: 3m at two_degree 1 and C(3m,2) at 2
inline FermionCheck counting_check(const FockOps& ops, int two_d) {
    FermionCheck out{"state counting", true, ""};
    auto states = ops.basis(two_d);
    std::map<int, long> by_deg;
    for (const auto& key : states) ++by_deg[FockOps::two_degree(key, ops.m)];
    long n = 3 * ops.m;
    if (by_deg[0] != 1 || by_deg[1] != n || by_deg[2] != n * (n - 1) / 2) {
        out.pass = false;
        out.counterexample = "degree census";
    }
    return out;
}

// Jacobi identity on a sample of current triples.
inline FermionCheck jacobi_check(const FockOps& ops, int two_d) {
    FermionCheck out{"jacobi identity on sampled triples", true, ""};
    auto states = ops.basis(std::min(two_d, 2));
    std::vector<std::array<std::pair<Gen, int>, 3>> triples = {
        {{{Gen::H, 1}, {Gen::E, -1}, {Gen::F, 0}}},
        {{{Gen::E, 0}, {Gen::F, 0}, {Gen::H, -1}}},
        {{{Gen::E, 1}, {Gen::F, -1}, {Gen::H, 0}}},
    };
    auto brk = [&](const std::pair<Gen, int>& x, const std::pair<Gen, int>& y,
                   const FockOps::Vec& v) {
        FockOps::Vec lhs = ops.current(x.first, x.second, ops.current(y.first, y.second, v));
        FockOps::Vec ba = ops.current(y.first, y.second, ops.current(x.first, x.second, v));
        for (const auto& [kk, cc] : ba) {
            auto [it, fresh] = lhs.try_emplace(kk, -cc);
            if (!fresh) {
                it->second -= cc;
                if (it->second.is_zero()) lhs.erase(it);
            }
        }
        return lhs;
    };
    for (const auto& tr : triples)
        for (const auto& key : states) {
            FockOps::Vec v;
            v.emplace(key, GaussRational(1));
            FockOps::Vec total;
            for (int rot = 0; rot < 3; ++rot) {
                const auto& x = tr[static_cast<std::size_t>(rot)];
                const auto& y = tr[static_cast<std::size_t>((rot + 1) % 3)];
                const auto& z = tr[static_cast<std::size_t>((rot + 2) % 3)];
                FockOps::Vec inner = brk(y, z, v);
                FockOps::Vec part = ops.current(x.first, x.second, inner);
                FockOps::Vec swap = brk(y, z, ops.current(x.first, x.second, v));
                for (const auto& [kk, cc] : part) {
                    auto [it, fresh] = total.try_emplace(kk, cc);
                    if (!fresh) {
                        it->second += cc;
                        if (it->second.is_zero()) total.erase(it);
                    }
                }
                for (const auto& [kk, cc] : swap) {
                    auto [it, fresh] = total.try_emplace(kk, -cc);
                    if (!fresh) {
                        it->second -= cc;
                        if (it->second.is_zero()) total.erase(it);
                    }
                }
            }
            if (!total.empty()) {
                out.pass = false;
                if (out.counterexample.empty()) out.counterexample = detail::key_str(ops, key);
            }
        }
    return out;
}

inline FermionReport fermion_verify(long m, int two_depth) {
    if (m < 4) throw std::invalid_argument("fermion_verify: m must be at least 4");
    FockOps ops(m);
    FermionReport rep;
    rep.m = m;
    rep.two_depth = two_depth;
    rep.checks.push_back(counting_check(ops, std::max(two_depth, 2)));
    rep.checks.push_back(clifford_check(ops, two_depth, 5));
    rep.checks.push_back(w_bracket_check(ops, two_depth));
    rep.checks.push_back(check_level(ops, two_depth));
    rep.checks.push_back(k_action_check(ops));
    rep.checks.push_back(jacobi_check(ops, two_depth));
    return rep;
}

}  // namespace kleinorb

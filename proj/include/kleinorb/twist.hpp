// sigma_r-twisted modules realized on the untwisted graded data: the grading
// shift, the twisted mode dictionary, component decompositions (including the
// i = k/2 quartet), and stabilizer subgroups.
#pragma once

#include <array>
#include <map>
#include <vector>

#include "kleinorb/affine.hpp"
#include "kleinorb/isotypic.hpp"

namespace kleinorb {

// Twisted conformal weight of a vector of untwisted conformal weight d and
// h^(r)-charge q: d + q/4 + k/16.
inline Rational twisted_weight(long k, long /*i*/, const Rational& d, long q) {
    return d + Rational(q, 4) + Rational(k, 16);
}

// Lowest twisted weight of the sigma_r-twist of L(k,i): i(i-k)/(4(k+2)) + k/16.
inline Rational twisted_base_weight(long k, long i) {
    return Rational(i * (i - k), 4 * (k + 2)) + Rational(k, 16);
}

// Untwisted realization of a twisted mode: e_n = e(n+1/2), f_n = f(n-1/2),
// h_n = h(n) for n != 0, h_0 = h(0) + k/2.
struct TwistedModeImage {
    Mode mode{Gen::H, 0};
    Rational scalar;  // additive central shift (only h_0 has one)
};

inline TwistedModeImage twisted_mode(Gen a, const Rational& n, long k) {
    if (a == Gen::H) {
        if (!n.is_integer()) throw std::invalid_argument("twisted_mode: h_n needs n in Z");
        long m = static_cast<long>(n.num());
        if (m == 0) return {Mode{Gen::H, 0}, Rational(k, 2)};
        return {Mode{Gen::H, static_cast<int>(m)}, Rational(0)};
    }
    if (!n.is_half_integer())
        throw std::invalid_argument("twisted_mode: e_n, f_n need n in 1/2 + Z");
    // n = num/2 with odd num
    long num = static_cast<long>(n.num());
    if (a == Gen::E) return {Mode{Gen::E, static_cast<int>((num + 1) / 2)}, Rational(0)};
    return {Mode{Gen::F, static_cast<int>((num - 1) / 2)}, Rational(0)};
}

template <class F>
Pbw<F> apply_twisted_mode(const VermaOps<F>& ops, Gen a, const Rational& n, const Pbw<F>& v) {
    TwistedModeImage im = twisted_mode(a, n, ops.k);
    Pbw<F> out = ops.apply(im.mode, v);
    if (!im.scalar.is_zero()) pbw_axpy(out, v, F(im.scalar));
    return out;
}

// Stabilizer of the sigma_r-twist of L(k,i) inside K.
inline std::vector<Klein> stabilizer(long k, long i, int r) {
    if (r < 1 || r > 3) throw std::invalid_argument("stabilizer: r must be 1, 2 or 3");
    if (k % 2 == 0 && i == k / 2)
        return {Klein::id, Klein::s1, Klein::s2, Klein::s3};
    return {Klein::id, static_cast<Klein>(r)};
}

// The twisted-module map transported from sigma_2 on the sigma_1-twist of
// L(k, k/2): conjugation sends h(m) -> -h(m) - k delta_{m,0}, e(m) -> f(m-1),
// f(m) -> e(m+1), and fixes the lowest vector v^{i,i}. Well defined (and
// form-preserving) exactly when i = k/2.
inline Pbw<Rational> quartet_involution(const VermaOps<Rational>& ops, const Term& t) {
    long i = ops.i;
    long steps = i - t.j;
    Pbw<Rational> w = VermaOps<Rational>::top(i, i);
    Rational fact(1);
    for (long s = 1; s <= steps; ++s) {
        w = ops.apply(Mode{Gen::F, -1}, w);
        fact = fact * Rational(s);
    }
    if (fact != Rational(1)) {
        Pbw<Rational> scaled;
        pbw_axpy(scaled, w, Rational(1) / fact);
        w = std::move(scaled);
    }
    for (auto it = t.mono.modes.rbegin(); it != t.mono.modes.rend(); ++it) {
        const Mode& m = *it;
        switch (m.g) {
            case Gen::H: {
                Pbw<Rational> nw = ops.apply(Mode{Gen::H, m.n}, w);
                Pbw<Rational> neg;
                pbw_axpy(neg, nw, Rational(-1));
                w = std::move(neg);
                break;
            }
            case Gen::E: w = ops.apply(Mode{Gen::F, m.n - 1}, w); break;
            case Gen::F: w = ops.apply(Mode{Gen::E, m.n + 1}, w); break;
        }
    }
    return w;
}

// Graded dimensions of the components of the sigma_r-twist of L(k,i), indexed
// by twice the twisted-degree offset from the lowest weight. For i != k/2 the
// components are "+" (slot 0) and "-" (slot 1); for i = k/2 the four slots are
// the quartet (0)..(3) cut by the grading congruence and the involution above.
struct TwistedTable {
    long k = 0, i = 0;
    int r = 1;
    bool quartet = false;
    Rational base;                          // weight at offset zero
    std::array<std::map<int, long>, 4> dims;  // two_tau -> dim

    Rational weight_at(int two_tau) const { return base + Rational(two_tau, 2); }

    // minimum twisted weight with nonzero dimension in a slot
    std::optional<Rational> lowest(int slot) const {
        const auto& m = dims[static_cast<std::size_t>(slot)];
        for (const auto& [two_tau, dim] : m)
            if (dim > 0) return weight_at(two_tau);
        return std::nullopt;
    }
};

// Cells (d, q) of the untwisted grading sitting at twisted offset two_tau/2.
inline std::vector<std::pair<int, int>> twisted_level_cells(long i, int two_tau) {
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d <= two_tau; ++d) {
        long q = 2L * two_tau - 4L * d - i;
        if (q < -(i + 2 * d) || q > i + 2 * d) continue;
        out.emplace_back(d, static_cast<int>(q));
    }
    return out;
}

// The raw involution is a module map only modulo the radical of the form.
// Compress it onto an explicit section of the quotient, where it must square
// to the identity exactly.
struct QuartetQuotient {
    Matrix<Rational> action;  // involution on the quotient of the level space
    Matrix<Rational> form;    // nondegenerate induced form on the section
};

inline QuartetQuotient quartet_quotient_action(const Matrix<Rational>& gram,
                                               const Matrix<Rational>& raw) {
    std::size_t n = gram.rows();
    Matrix<Rational> radical = kernel_basis(gram);
    std::size_t r = radical.cols();
    std::size_t m = n - r;

    // greedy section: coordinate vectors independent of the radical
    EchelonSpan<Rational> span(n);
    for (std::size_t c = 0; c < r; ++c) {
        std::vector<Rational> row(n);
        for (std::size_t t = 0; t < n; ++t) row[t] = radical(t, c);
        span.add(std::move(row));
    }
    std::vector<std::size_t> picks;
    for (std::size_t t = 0; t < n && picks.size() < m; ++t) {
        std::vector<Rational> row(n);
        row[t] = Rational(1);
        if (span.add(std::move(row))) picks.push_back(t);
    }

    Matrix<Rational> basis(n, n);  // [section | radical]
    for (std::size_t c = 0; c < m; ++c) basis(picks[c], c) = Rational(1);
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t t = 0; t < n; ++t) basis(t, m + c) = radical(t, c);
    Matrix<Rational> binv = inverse(basis);

    Matrix<Rational> raw_on_section(n, m);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t t = 0; t < n; ++t) raw_on_section(t, c) = raw(t, picks[c]);
    Matrix<Rational> coords = binv * raw_on_section;

    QuartetQuotient out;
    out.action = Matrix<Rational>(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c) out.action(a, c) = coords(a, c);
    if (!(out.action * out.action == Matrix<Rational>::identity(m)))
        throw std::logic_error("quartet involution does not descend to an involution");
    out.form = Matrix<Rational>(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t c = 0; c < m; ++c) out.form(a, c) = gram(picks[a], picks[c]);
    return out;
}

inline TwistedTable twisted_component_dims(long k, long i, int r, int two_tau_max,
                                           RankCache& ranks) {
    if (i < 0 || i > k) throw std::invalid_argument("twisted_component_dims: need 0 <= i <= k");
    if (r < 1 || r > 3) throw std::invalid_argument("twisted_component_dims: r must be 1, 2 or 3");
    TwistedTable out;
    out.k = k;
    out.i = i;
    out.r = r;
    out.quartet = (k % 2 == 0 && i == k / 2);
    out.base = twisted_base_weight(k, i);

    // Graded data in the r-adapted basis coincides with the r = 1 data: the
    // inner automorphism carrying the standard triple to the r-triple is
    // degree-preserving and maps L(k,i) to itself.
    VermaOps<Rational> ops{k, i};
    for (int two_tau = 0; two_tau <= two_tau_max; ++two_tau) {
        auto cells = twisted_level_cells(i, two_tau);
        if (!out.quartet) {
            for (const auto& [d, q] : cells) {
                long rk = ranks.rank(k, i, d, q);
                if (rk == 0) continue;
                int slot = ((q + i) % 4 + 4) % 4 == 0 ? 0 : 1;
                out.dims[static_cast<std::size_t>(slot)][two_tau] += rk;
            }
            continue;
        }
        // quartet: split each congruence class by the involution's eigenvalue
        for (int parity = 0; parity <= 2; parity += 2) {
            std::vector<Term> basis;
            std::map<Term, std::size_t> index;
            std::vector<std::pair<int, int>> used;
            for (const auto& [d, q] : cells) {
                if (((q + i) % 4 + 4) % 4 != parity) continue;
                for (const auto& t : cell_basis(i, d, q)) {
                    index.emplace(t, basis.size());
                    basis.push_back(t);
                }
                used.emplace_back(d, q);
            }
            if (basis.empty()) continue;
            Matrix<Rational> gram(basis.size(), basis.size());
            for (const auto& [d, q] : used) {
                auto cb = cell_basis(i, d, q);
                auto g = gram_matrix(k, i, d, q);
                std::size_t off = index.at(cb.front());
                for (std::size_t a = 0; a < cb.size(); ++a)
                    for (std::size_t b = 0; b < cb.size(); ++b) gram(off + a, off + b) = g(a, b);
            }
            Matrix<Rational> qmat(basis.size(), basis.size());
            for (std::size_t c = 0; c < basis.size(); ++c) {
                Pbw<Rational> img = quartet_involution(ops, basis[c]);
                for (const auto& [t, coeff] : img) qmat(index.at(t), c) = coeff;
            }
            QuartetQuotient qq = quartet_quotient_action(gram, qmat);
            for (int e = 0; e < 2; ++e) {
                long dim = static_cast<long>(eigenspace(qq.action, e == 0 ? 1 : -1).cols());
                if (dim == 0) continue;
                int slot = (parity == 0) ? e : 2 + e;
                out.dims[static_cast<std::size_t>(slot)][two_tau] += dim;
            }
        }
    }
    return out;
}

}  // namespace kleinorb

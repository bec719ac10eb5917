// Finite-dimensional sl2 modules, the Klein group action on sl2, the three
// adapted sl2-triples, and the phi maps on top levels.
#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinorb/linalg.hpp"
#include "kleinorb/rational.hpp"

namespace kleinorb {

// sigma_0 = id, sigma_3 = sigma_1 sigma_2; every element is an involution.
enum class Klein : int { id = 0, s1 = 1, s2 = 2, s3 = 3 };

inline Klein klein_mul(Klein a, Klein b) {
    return static_cast<Klein>(static_cast<int>(a) ^ static_cast<int>(b));
}

// Character table of K: chi[l](sigma_r), rows chi_0..chi_3, columns id,s1,s2,s3.
inline int klein_character(int l, Klein g) {
    static constexpr int table[4][4] = {
        {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
    return table[l][static_cast<int>(g)];
}

// Element of sl2(C) in the ordered basis (h, e, f).
struct Sl2 {
    GaussRational h, e, f;

    friend Sl2 operator+(const Sl2& a, const Sl2& b) { return {a.h + b.h, a.e + b.e, a.f + b.f}; }
    friend Sl2 operator-(const Sl2& a, const Sl2& b) { return {a.h - b.h, a.e - b.e, a.f - b.f}; }
    friend Sl2 operator*(const GaussRational& s, const Sl2& a) { return {s * a.h, s * a.e, s * a.f}; }
    Sl2 operator-() const { return {-h, -e, -f}; }
    friend bool operator==(const Sl2& a, const Sl2& b) {
        return a.h == b.h && a.e == b.e && a.f == b.f;
    }
};

inline Sl2 sl2_h() { return {GaussRational(1), GaussRational(0), GaussRational(0)}; }
inline Sl2 sl2_e() { return {GaussRational(0), GaussRational(1), GaussRational(0)}; }
inline Sl2 sl2_f() { return {GaussRational(0), GaussRational(0), GaussRational(1)}; }

// [h,e] = 2e, [h,f] = -2f, [e,f] = h, extended bilinearly.
inline Sl2 bracket(const Sl2& a, const Sl2& b) {
    GaussRational two(2);
    Sl2 r;
    r.e = two * (a.h * b.e - a.e * b.h);
    r.f = two * (a.f * b.h - a.h * b.f);
    r.h = a.e * b.f - a.f * b.e;
    return r;
}

// Normalized invariant form: <h,h> = 2, <e,f> = <f,e> = 1, other pairs 0.
inline GaussRational invariant_form(const Sl2& a, const Sl2& b) {
    return GaussRational(2) * a.h * b.h + a.e * b.f + a.f * b.e;
}

// sigma_1: h -> h, e -> -e, f -> -f; sigma_2: h -> -h, e <-> f.
inline Sl2 sigma(Klein g, const Sl2& a) {
    switch (g) {
        case Klein::id: return a;
        case Klein::s1: return {a.h, -a.e, -a.f};
        case Klein::s2: return {-a.h, a.f, a.e};
        case Klein::s3: return {-a.h, -a.f, -a.e};
    }
    throw std::logic_error("sigma: bad element");
}

// The adapted sl2-triple (h^(r), e^(r), f^(r)), r in {1,2,3}.
inline std::array<Sl2, 3> triple(int r) {
    GaussRational half(Rational(1, 2));
    GaussRational i = GaussRational::i();
    switch (r) {
        case 1: return {sl2_h(), sl2_e(), sl2_f()};
        case 2:
            return {Sl2{GaussRational(0), GaussRational(1), GaussRational(1)},
                    Sl2{half, -half, half}, Sl2{half, half, -half}};
        case 3:
            return {Sl2{GaussRational(0), i, -i}, Sl2{half * i, half, half},
                    Sl2{-(half * i), half, half}};
    }
    throw std::invalid_argument("triple: r must be 1, 2 or 3");
}

// Vector in the (i+1)-dimensional module L(i*alpha/2), standard basis v^{i,j}.
struct FinVector {
    long i = 0;
    std::vector<GaussRational> c;  // c[j], 0 <= j <= i

    explicit FinVector(long i_) : i(i_), c(static_cast<std::size_t>(i_) + 1) {}
    static FinVector unit(long i_, long j) {
        FinVector v(i_);
        v.c[static_cast<std::size_t>(j)] = GaussRational(1);
        return v;
    }
};

enum class Gen : int { H = 0, E = 1, F = 2 };

// Zero-mode action of a basis generator in adapted coordinates:
// h(0)v^{i,j} = (i-2j)v^{i,j}, e(0)v^{i,j} = (i-j+1)v^{i,j-1},
// f(0)v^{i,j} = (j+1)v^{i,j+1}; actions off the edge give zero.
template <class F>
Matrix<F> generator_action(Gen g, long i) {
    auto n = static_cast<std::size_t>(i) + 1;
    Matrix<F> m(n, n);
    for (long j = 0; j <= i; ++j) {
        auto cj = static_cast<std::size_t>(j);
        switch (g) {
            case Gen::H: m(cj, cj) = F(i - 2 * j); break;
            case Gen::E:
                if (j >= 1) m(cj - 1, cj) = F(i - j + 1);
                break;
            case Gen::F:
                if (j <= i - 1) m(cj + 1, cj) = F(j + 1);
                break;
        }
    }
    return m;
}

// Zero-mode matrix of a general sl2 element on the standard basis of L(i*alpha/2).
inline Matrix<GaussRational> zero_mode_matrix(const Sl2& a, long i) {
    Matrix<GaussRational> m = a.h * generator_action<GaussRational>(Gen::H, i) +
                              a.e * generator_action<GaussRational>(Gen::E, i) +
                              a.f * generator_action<GaussRational>(Gen::F, i);
    return m;
}

inline FinVector zero_mode_act(const Sl2& a, const FinVector& v) {
    Matrix<GaussRational> m = zero_mode_matrix(a, v.i);
    FinVector out(v.i);
    for (long r = 0; r <= v.i; ++r)
        for (long c = 0; c <= v.i; ++c)
            out.c[static_cast<std::size_t>(r)] +=
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) *
                v.c[static_cast<std::size_t>(c)];
    return out;
}

// Columns express v^{r,i,j} in the standard basis. Column i is seeded from
// the closed expansions (v^{2,i,i} = sum (-1)^j v^{i,j}, v^{3,i,i} = sum
// (sqrt(-1))^j v^{i,j}) and the rest follow the downward recursion
// v^{r,i,j-1} = e^(r)(0) v^{r,i,j} / (i-j+1).
inline Matrix<GaussRational> triple_basis(int r, long i) {
    auto n = static_cast<std::size_t>(i) + 1;
    Matrix<GaussRational> b(n, n);
    FinVector top(i);
    if (r == 1) {
        top.c[static_cast<std::size_t>(i)] = GaussRational(1);
    } else if (r == 2 || r == 3) {
        GaussRational w = (r == 2) ? GaussRational(-1) : GaussRational::i();
        GaussRational pw(1);
        for (long j = 0; j <= i; ++j) {
            top.c[static_cast<std::size_t>(j)] = pw;
            pw = pw * w;
        }
    } else {
        throw std::invalid_argument("triple_basis: r must be 1, 2 or 3");
    }
    Sl2 er = triple(r)[1];
    FinVector col = top;
    for (long j = i; j >= 0; --j) {
        for (long t = 0; t <= i; ++t)
            b(static_cast<std::size_t>(t), static_cast<std::size_t>(j)) =
                col.c[static_cast<std::size_t>(t)];
        if (j > 0) {
            col = zero_mode_act(er, col);
            GaussRational inv = GaussRational(1) / GaussRational(i - j + 1);
            for (auto& x : col.c) x = inv * x;
        }
    }
    return b;
}

// phi(sigma_0) = id, phi(sigma_1)v^{i,j} = (-1)^j v^{i,j},
// phi(sigma_2)v^{i,j} = v^{i,i-j}, phi(sigma_3)v^{i,j} = (-1)^{i-j} v^{i,i-j}.
inline Matrix<GaussRational> phi_matrix(Klein g, long i) {
    auto n = static_cast<std::size_t>(i) + 1;
    Matrix<GaussRational> m(n, n);
    for (long j = 0; j <= i; ++j) {
        auto cj = static_cast<std::size_t>(j);
        switch (g) {
            case Klein::id: m(cj, cj) = GaussRational(1); break;
            case Klein::s1: m(cj, cj) = GaussRational((j % 2 == 0) ? 1 : -1); break;
            case Klein::s2: m(static_cast<std::size_t>(i - j), cj) = GaussRational(1); break;
            case Klein::s3:
                m(static_cast<std::size_t>(i - j), cj) =
                    GaussRational(((i - j) % 2 == 0) ? 1 : -1);
                break;
        }
    }
    return m;
}

}  // namespace kleinorb

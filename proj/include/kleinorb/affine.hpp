// Generalized Verma modules for affine sl2 at level k: PBW monomials in
// creation modes applied to a finite-dimensional top level, normal-ordering
// rewrite, the contravariant form, and irreducible graded dimensions by
// Gram rank.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kleinorb/linalg.hpp"
#include "kleinorb/rational.hpp"
#include "kleinorb/sl2.hpp"

namespace kleinorb {

// a(n); degree of a(n) is -n, creation modes have n < 0.
struct Mode {
    Gen g;
    int n;
};

inline int gen_charge(Gen g) { return g == Gen::E ? 2 : g == Gen::F ? -2 : 0; }

// PBW order: descending |n|, ties broken h < e < f. Strict "a comes first".
inline bool mode_before(const Mode& a, const Mode& b) {
    int da = a.n < 0 ? -a.n : a.n;
    int db = b.n < 0 ? -b.n : b.n;
    if (da != db) return da > db;
    return static_cast<int>(a.g) < static_cast<int>(b.g);
}

inline bool mode_eq(const Mode& a, const Mode& b) { return a.g == b.g && a.n == b.n; }

// Ordered monomial of creation modes.
struct Monomial {
    std::vector<Mode> modes;

    int degree() const {
        int d = 0;
        for (const auto& m : modes) d -= m.n;
        return d;
    }
    int charge() const {
        int q = 0;
        for (const auto& m : modes) q += gen_charge(m.g);
        return q;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        if (a.modes.size() != b.modes.size()) return false;
        for (std::size_t t = 0; t < a.modes.size(); ++t)
            if (!mode_eq(a.modes[t], b.modes[t])) return false;
        return true;
    }
    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.modes.size() != b.modes.size()) return a.modes.size() < b.modes.size();
        for (std::size_t t = 0; t < a.modes.size(); ++t) {
            if (a.modes[t].n != b.modes[t].n) return a.modes[t].n < b.modes[t].n;
            if (a.modes[t].g != b.modes[t].g) return a.modes[t].g < b.modes[t].g;
        }
        return false;
    }
};

// PBW basis element: monomial applied to the top-level vector v^{i,j}.
struct Term {
    Monomial mono;
    long j;

    friend bool operator<(const Term& a, const Term& b) {
        if (a.j != b.j) return a.j < b.j;
        return a.mono < b.mono;
    }
    friend bool operator==(const Term& a, const Term& b) { return a.j == b.j && a.mono == b.mono; }
};

template <class F>
using Pbw = std::map<Term, F>;

template <class F>
void pbw_add(Pbw<F>& dst, const Term& t, const F& c) {
    if (c.is_zero()) return;
    auto it = dst.find(t);
    if (it == dst.end()) {
        dst.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) dst.erase(it);
    }
}

template <class F>
void pbw_axpy(Pbw<F>& dst, const Pbw<F>& src, const F& scale) {
    if (scale.is_zero()) return;
    for (const auto& [t, c] : src) pbw_add(dst, t, scale * c);
}

template <class F>
int pbw_max_degree(const Pbw<F>& v) {
    int d = 0;
    for (const auto& [t, c] : v) d = std::max(d, t.mono.degree());
    return d;
}

// [a,b] = coeff * g in the sl2 bracket table, or nullopt when zero.
struct GenBracket {
    int coeff;
    Gen g;
};
inline std::optional<GenBracket> gen_bracket(Gen a, Gen b) {
    if (a == b) return std::nullopt;
    if (a == Gen::H) return GenBracket{b == Gen::E ? 2 : -2, b};
    if (b == Gen::H) return GenBracket{a == Gen::E ? -2 : 2, a};
    if (a == Gen::E) return GenBracket{1, Gen::H};   // [e,f] = h
    return GenBracket{-1, Gen::H};                   // [f,e] = -h
}

// Invariant pairing <h,h> = 2, <e,f> = <f,e> = 1, other pairs 0.
inline int gen_pairing(Gen a, Gen b) {
    if (a == Gen::H && b == Gen::H) return 2;
    if ((a == Gen::E && b == Gen::F) || (a == Gen::F && b == Gen::E)) return 1;
    return 0;
}

// [a(m), b(n)] = [a,b](m+n) + m delta_{m+n,0} <a,b> k.
struct ModeCommutator {
    int coeff = 0;               // coefficient of the bracket mode, 0 when absent
    Mode mode{Gen::H, 0};        // meaningful only when coeff != 0
    long central_k_factor = 0;   // total central term is central_k_factor * k
};

inline ModeCommutator commutator(const Mode& a, const Mode& b) {
    ModeCommutator out;
    if (auto br = gen_bracket(a.g, b.g)) {
        out.coeff = br->coeff;
        out.mode = Mode{br->g, a.n + b.n};
    }
    if (a.n + b.n == 0) out.central_k_factor = static_cast<long>(a.n) * gen_pairing(a.g, b.g);
    return out;
}

// Adjoint for the contravariant form: e(n) -> f(-n), f(n) -> e(-n), h(n) -> h(-n).
inline Mode adjoint(const Mode& m) {
    Gen g = m.g == Gen::E ? Gen::F : m.g == Gen::F ? Gen::E : Gen::H;
    return Mode{g, -m.n};
}

// Rewrite engine for the level-k generalized Verma module on L(i*alpha/2).
template <class F>
struct VermaOps {
    long k;
    long i;

    static Pbw<F> top(long i_, long j) {
        Pbw<F> v;
        v.emplace(Term{Monomial{}, j}, F(1));
        return v;
    }

    Pbw<F> apply(const Mode& m, const Pbw<F>& v) const {
        Pbw<F> out;
        for (const auto& [t, c] : v) {
            Pbw<F> part = apply_term(m, t);
            pbw_axpy(out, part, c);
        }
        return out;
    }

    // a(n) h-coefficient etc.; applies c_h h(n) + c_e e(n) + c_f f(n).
    Pbw<F> apply_combo(const F& ch, const F& ce, const F& cf, int n, const Pbw<F>& v) const {
        Pbw<F> out;
        if (!ch.is_zero()) pbw_axpy(out, apply(Mode{Gen::H, n}, v), ch);
        if (!ce.is_zero()) pbw_axpy(out, apply(Mode{Gen::E, n}, v), ce);
        if (!cf.is_zero()) pbw_axpy(out, apply(Mode{Gen::F, n}, v), cf);
        return out;
    }

    Pbw<F> apply_term(const Mode& m, const Term& t) const {
        Pbw<F> out;
        if (t.mono.modes.empty()) {
            if (m.n > 0) return out;  // a(n) v^{i,j} = 0 for n >= 1
            if (m.n == 0) {
                long j = t.j;
                switch (m.g) {
                    case Gen::H: pbw_add(out, t, F(i - 2 * j)); break;
                    case Gen::E:
                        if (j >= 1) pbw_add(out, Term{Monomial{}, j - 1}, F(i - j + 1));
                        break;
                    case Gen::F:
                        if (j <= i - 1) pbw_add(out, Term{Monomial{}, j + 1}, F(j + 1));
                        break;
                }
                return out;
            }
            Term nt{Monomial{{m}}, t.j};
            pbw_add(out, nt, F(1));
            return out;
        }
        Mode x = t.mono.modes.front();
        if (m.n < 0 && !mode_before(x, m)) {
            Term nt = t;
            nt.mono.modes.insert(nt.mono.modes.begin(), m);
            pbw_add(out, nt, F(1));
            return out;
        }
        Term tail{Monomial{{t.mono.modes.begin() + 1, t.mono.modes.end()}}, t.j};
        // a(n) x rest = x (a(n) rest) + [a(n), x] rest
        Pbw<F> inner = apply_term(m, tail);
        pbw_axpy(out, apply(x, inner), F(1));
        if (auto br = gen_bracket(m.g, x.g)) {
            Pbw<F> piece = apply_term(Mode{br->g, m.n + x.n}, tail);
            pbw_axpy(out, piece, F(br->coeff));
        }
        if (m.n + x.n == 0) {
            int p = gen_pairing(m.g, x.g);
            if (p != 0) pbw_add(out, tail, F(m.n) * F(p) * F(k));
        }
        return out;
    }

    // Contravariant pairing against the top level: <v^{i,j}, v^{i,j}> = C(i,j),
    // distinct j orthogonal; v must be of degree 0.
    F top_pair(long j, const Pbw<F>& v) const {
        F out(0);
        for (const auto& [t, c] : v) {
            if (!t.mono.modes.empty())
                throw std::logic_error("top_pair: vector not reduced to the top level");
            if (t.j == j) out += c * F(binomial(i, j));
        }
        return out;
    }

    // <left, right> with left a basis term: move adj(left) across the form.
    F pair_with_basis(const Term& left, const Pbw<F>& right) const {
        Pbw<F> w = right;
        for (const auto& m : left.mono.modes) w = apply(adjoint(m), w);
        return top_pair(left.j, w);
    }
};

// All ordered monomials of a given degree (3-colored partitions), memoized.
inline const std::vector<Monomial>& monomials_of_degree(int d) {
    static std::map<int, std::vector<Monomial>> cache;
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    std::vector<Mode> order;
    for (int a = d; a >= 1; --a)
        for (Gen g : {Gen::H, Gen::E, Gen::F}) order.push_back(Mode{g, -a});

    std::vector<Monomial> out;
    Monomial cur;
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t t = pos; t < order.size(); ++t) {
            int deg = -order[t].n;
            if (deg > remaining) continue;
            cur.modes.push_back(order[t]);
            self(self, t, remaining - deg);
            cur.modes.pop_back();
        }
    };
    rec(rec, 0, d);
    return cache.emplace(d, std::move(out)).first->second;
}

// Basis of the (degree d, h-charge q) weight space of the generalized Verma
// module on L(i*alpha/2).
inline std::vector<Term> cell_basis(long i, int d, int q) {
    std::vector<Term> out;
    for (const auto& mono : monomials_of_degree(d)) {
        long num = i + mono.charge() - q;
        if (num % 2 != 0) continue;
        long j = num / 2;
        if (j < 0 || j > i) continue;
        out.push_back(Term{mono, j});
    }
    return out;
}

// Symmetric Gram matrix of the contravariant form on a weight cell.
inline Matrix<Rational> gram_matrix(long k, long i, int d, int q) {
    VermaOps<Rational> ops{k, i};
    std::vector<Term> basis = cell_basis(i, d, q);
    std::size_t n = basis.size();
    Matrix<Rational> g(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        Pbw<Rational> vc = VermaOps<Rational>::top(i, basis[c].j);
        vc.clear();
        vc.emplace(basis[c], Rational(1));
        for (std::size_t r = 0; r <= c; ++r) {
            Rational val = ops.pair_with_basis(basis[r], vc);
            g(r, c) = val;
            g(c, r) = val;
        }
    }
    return g;
}

// A weight cell of the generalized Verma module together with the symmetric
// Gram matrix of the contravariant form on it.
struct GramBlock {
    long k = 0, i = 0;
    int d = 0, q = 0;
    std::vector<Term> basis;
    Matrix<Rational> matrix;
};

inline GramBlock gram_block(long k, long i, int d, int q) {
    GramBlock b;
    b.k = k;
    b.i = i;
    b.d = d;
    b.q = q;
    b.basis = cell_basis(i, d, q);
    b.matrix = gram_matrix(k, i, d, q);
    return b;
}

// Hook for persisting ranks outside the process.
struct RankStore {
    virtual std::optional<long> get(long k, long i, int d, int q) = 0;
    virtual void put(long k, long i, int d, int q, long rank) = 0;
    virtual ~RankStore() = default;
};

// Memoized Gram ranks keyed by (k, i, d, q); rank of the cell's Gram matrix
// equals the graded dimension of the irreducible quotient L(k,i) there.
class RankCache {
public:
    void attach(RankStore* store) { store_ = store; }

    long rank(long k, long i, int d, int q) {
        std::array<long, 4> key{k, i, d, q};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        if (store_) {
            if (auto r = store_->get(k, i, d, q)) {
                memo_.emplace(key, *r);
                return *r;
            }
        }
        long r = static_cast<long>(rank_bareiss(gram_matrix(k, i, d, q)));
        memo_.emplace(key, r);
        if (store_) store_->put(k, i, d, q, r);
        return r;
    }

private:
    std::map<std::array<long, 4>, long> memo_;
    RankStore* store_ = nullptr;
};

inline Rational lowest_conformal_weight(long k, long i) {
    return Rational(i * (i + 2), 4 * (k + 2));
}

struct GradedDims {
    long k = 0, i = 0;
    int depth = 0;
    std::map<std::pair<int, int>, long> dim;  // (d, q) -> dim, zero cells omitted
    std::vector<long> total;                  // by degree

    long at(int d, int q) const {
        auto it = dim.find({d, q});
        return it == dim.end() ? 0 : it->second;
    }
};

// Graded dimensions of the irreducible quotient L(k,i) up to degree D.
inline GradedDims irreducible_graded_dims(long k, long i, int D, RankCache& cache) {
    if (i < 0 || i > k) throw std::invalid_argument("irreducible_graded_dims: need 0 <= i <= k");
    GradedDims out;
    out.k = k;
    out.i = i;
    out.depth = D;
    out.total.assign(static_cast<std::size_t>(D) + 1, 0);
    for (int d = 0; d <= D; ++d) {
        for (long q = -(i + 2 * d); q <= i + 2 * d; q += 2) {
            long r = cache.rank(k, i, d, static_cast<int>(q));
            if (r > 0) {
                out.dim[{d, static_cast<int>(q)}] = r;
                out.total[static_cast<std::size_t>(d)] += r;
            }
        }
    }
    return out;
}

// Transported Klein action Phi(sigma_r) = (sigma_r on modes) tensor (phi(sigma_r)
// on the top level), evaluated on a PBW basis term.
template <class F>
Pbw<F> transport_term(const VermaOps<F>& ops, Klein r, const Term& t) {
    long i = ops.i;
    // phi(sigma_r) image of v^{i,j}
    long j = t.j;
    long jt;
    int sign;
    switch (r) {
        case Klein::id: jt = j; sign = 1; break;
        case Klein::s1: jt = j; sign = (j % 2 == 0) ? 1 : -1; break;
        case Klein::s2: jt = i - j; sign = 1; break;
        case Klein::s3: jt = i - j; sign = ((i - j) % 2 == 0) ? 1 : -1; break;
        default: throw std::logic_error("transport_term: bad element");
    }
    Pbw<F> w = VermaOps<F>::top(i, jt);
    if (sign < 0) {
        for (auto& [term, c] : w) c = -c;
    }
    for (auto it = t.mono.modes.rbegin(); it != t.mono.modes.rend(); ++it) {
        Mode m = *it;
        Gen mapped = m.g;
        int s = 1;
        switch (r) {
            case Klein::id: break;
            case Klein::s1:
                if (m.g != Gen::H) s = -1;
                break;
            case Klein::s2:
                if (m.g == Gen::H) s = -1;
                else mapped = (m.g == Gen::E) ? Gen::F : Gen::E;
                break;
            case Klein::s3:
                s = -1;
                if (m.g != Gen::H) mapped = (m.g == Gen::E) ? Gen::F : Gen::E;
                break;
        }
        w = ops.apply(Mode{mapped, m.n}, w);
        if (s < 0)
            for (auto& [term, c] : w) c = -c;
    }
    return w;
}

}  // namespace kleinorb

// The fusion ring of the Z2-orbifold of the level-k affine sl2 VOA: the sign
// rule, the four fusion-rule families, ring-axiom verification, and the
// simple-current extension lift classifier.
#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinorb/affine.hpp"
#include "kleinorb/twist.hpp"

namespace kleinorb {

// Label of an irreducible module of the Z2-orbifold: sector, index, sign.
struct Z2Label {
    bool twisted = false;
    long i = 0;
    int sign = +1;

    friend bool operator==(const Z2Label& a, const Z2Label& b) {
        return a.twisted == b.twisted && a.i == b.i && a.sign == b.sign;
    }
    // canonical key order: sector, then index, then sign (+ before -)
    friend bool operator<(const Z2Label& a, const Z2Label& b) {
        if (a.twisted != b.twisted) return !a.twisted;
        if (a.i != b.i) return a.i < b.i;
        return a.sign > b.sign;
    }
};

inline std::string label_str(const Z2Label& a) {
    std::string s = a.twisted ? "T(" : "U(";
    s += std::to_string(a.i);
    s += a.sign > 0 ? ",+)" : ",-)";
    return s;
}

// Strict parser for the ASCII label grammar U(i,s) / T(i,s).
inline Z2Label parse_z2_label(const std::string& s) {
    auto fail = [&](std::size_t pos, const std::string& what) {
        throw std::invalid_argument("label '" + s + "': " + what + " at position " +
                                    std::to_string(pos));
    };
    std::size_t p = 0;
    Z2Label out;
    if (p >= s.size() || (s[p] != 'U' && s[p] != 'T')) fail(p, "expected 'U' or 'T'");
    out.twisted = (s[p] == 'T');
    ++p;
    if (p >= s.size() || s[p] != '(') fail(p, "expected '('");
    ++p;
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    if (p == start) fail(p, "expected an index");
    out.i = std::stol(s.substr(start, p - start));
    if (p >= s.size() || s[p] != ',') fail(p, "expected ','");
    ++p;
    if (p >= s.size() || (s[p] != '+' && s[p] != '-')) fail(p, "expected '+' or '-'");
    out.sign = (s[p] == '+') ? +1 : -1;
    ++p;
    if (p >= s.size() || s[p] != ')') fail(p, "expected ')'");
    ++p;
    if (p != s.size()) fail(p, "trailing input");
    return out;
}

// sign(i,j,l)^+ = + iff i+j-l in 4Z; sign(i,j,l)^- is its flip.
inline int sign_rule(long i, long j, long l, int base) {
    if ((i + j + l) % 2 != 0) throw std::invalid_argument("sign_rule: i+j+l must be even");
    long t = i + j - l;
    bool plus = ((t % 4) + 4) % 4 == 0;
    return plus ? base : -base;
}

// All labels of the level-k ring, in canonical order.
inline std::vector<Z2Label> all_z2_labels(long k) {
    std::vector<Z2Label> out;
    for (int tw = 0; tw <= 1; ++tw)
        for (long i = 0; i <= k; ++i)
            for (int s : {+1, -1}) out.push_back(Z2Label{tw == 1, i, s});
    return out;
}

// Fusion product. Twisted x twisted is not part of the ring data and is
// rejected; twisted x untwisted goes through commutativity.
inline std::vector<Z2Label> fuse(const Z2Label& a, const Z2Label& b, long k) {
    if (a.i < 0 || a.i > k || b.i < 0 || b.i > k)
        throw std::invalid_argument("fuse: index out of range");
    if (a.twisted && b.twisted)
        throw std::invalid_argument("fuse: twisted x twisted is unsupported");
    const Z2Label& left = a.twisted ? b : a;
    const Z2Label& right = a.twisted ? a : b;
    std::vector<Z2Label> out;
    long lo = std::labs(left.i - right.i);
    long hi = std::min(left.i + right.i, 2 * k - left.i - right.i);
    for (long l = lo; l <= hi; l += 2) {
        int s = sign_rule(left.i, right.i, l, right.sign);
        if (left.sign < 0) s = -s;
        out.push_back(Z2Label{right.twisted, l, s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Lowest conformal weight attached to a Z2 label. The minus label of the
// untwisted vacuum is generated by e^(r)(-1)|0> of weight 1; every other
// untwisted pair shares the top-level weight.
inline Rational z2_lowest_weight(long k, const Z2Label& a) {
    if (!a.twisted) {
        if (a.i == 0) return a.sign > 0 ? Rational(0) : Rational(1);
        return lowest_conformal_weight(k, a.i);
    }
    Rational w = twisted_base_weight(k, a.i);
    if (a.sign < 0) w += Rational(1, 2);
    return w;
}

struct RingReport {
    long k = 0;
    bool commutative = false;
    bool associative = false;
    Z2Label unit;
    std::vector<Z2Label> simple_currents;
    bool ok() const { return commutative && associative; }
};

namespace detail {

inline std::vector<Z2Label> fuse_sum(const std::vector<Z2Label>& xs, const Z2Label& b, long k) {
    std::vector<Z2Label> out;
    for (const auto& x : xs) {
        auto part = fuse(x, b, k);
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Exhaustive commutativity/associativity over the supported sectors, the
// unit, and the simple currents (untwisted labels with single-label fusion).
inline RingReport verify_ring(long k) {
    RingReport rep;
    rep.k = k;
    auto labels = all_z2_labels(k);

    rep.commutative = true;
    for (const auto& a : labels)
        for (const auto& b : labels) {
            if (a.twisted && b.twisted) continue;
            if (!(fuse(a, b, k) == fuse(b, a, k))) rep.commutative = false;
        }

    rep.associative = true;
    for (const auto& a : labels)
        for (const auto& b : labels)
            for (const auto& c : labels) {
                int twisted = (a.twisted ? 1 : 0) + (b.twisted ? 1 : 0) + (c.twisted ? 1 : 0);
                if (twisted > 1) continue;
                auto lhs = detail::fuse_sum(fuse(a, b, k), c, k);
                auto rhs = detail::fuse_sum(fuse(b, c, k), a, k);
                if (!(lhs == rhs)) rep.associative = false;
            }

    for (const auto& u : labels) {
        if (u.twisted) continue;
        bool unit = true;
        for (const auto& x : labels) {
            auto p = fuse(u, x, k);
            if (!(p.size() == 1 && p[0] == x)) unit = false;
        }
        if (unit) rep.unit = u;
        bool simple = true;
        for (const auto& x : labels)
            if (fuse(u, x, k).size() != 1) simple = false;
        if (simple) rep.simple_currents.push_back(u);
    }
    return rep;
}

enum class LiftKind { NonsplitPair, Split, NotLiftable };

struct LiftResult {
    LiftKind kind = LiftKind::Split;
    Z2Label partner;   // J * label
    Rational gap;      // weight(partner) - weight(label)
};

// Lift classification for the simple-current extension by J = U(2m,+) of the
// level-2m ring: nonsplit pairs need an integral weight gap, a half-integral
// gap obstructs the lift, and a fixed point splits.
inline LiftResult extension_lift(long m, const Z2Label& x) {
    long k = 2 * m;
    Z2Label current{false, k, +1};
    auto prod = fuse(current, x, k);
    if (prod.size() != 1)
        throw std::logic_error("extension_lift: U(k,+) is not acting as a simple current");
    LiftResult out;
    out.partner = prod[0];
    out.gap = z2_lowest_weight(k, out.partner) - z2_lowest_weight(k, x);
    if (out.partner == x) {
        out.kind = LiftKind::Split;
    } else if (out.gap.is_integer()) {
        out.kind = LiftKind::NonsplitPair;
    } else if (out.gap.is_half_integer()) {
        out.kind = LiftKind::NotLiftable;
    } else {
        throw std::logic_error("extension_lift: weight gap is neither integral nor half-integral");
    }
    return out;
}

}  // namespace kleinorb

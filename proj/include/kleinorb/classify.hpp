// Complete irreducible-module lists for the Klein orbifold of the level-k
// affine sl2 VOA and for the rank-three commutant it realizes, with exact
// lowest weights and top-level data, plus the engine cross-check.
#pragma once

#include <string>
#include <vector>

#include "kleinorb/fusion.hpp"
#include "kleinorb/isotypic.hpp"
#include "kleinorb/twist.hpp"

namespace kleinorb {

struct KLabel {
    enum class Kind { UntwistedOdd, UntwistedEven, Twisted, TwistedMid };
    Kind kind = Kind::UntwistedEven;
    long i = 0;    // module index (for TwistedMid this is k/2)
    int j = 0;     // isotypic tag 0..3 (UntwistedEven, TwistedMid)
    int r = 1;     // twist direction 1..3 (Twisted, TwistedMid)
    int sign = 1;  // +-1 (Twisted)
};

struct Descriptor {
    KLabel label;
    std::string name;       // paper-style serialized label
    std::string sector;     // "untwisted" or "twisted-sigma_r"
    Rational weight;        // exact lowest weight
    long top_dim = 0;       // dimension of the lowest weight space
    std::string generator;  // textual lowest-weight vector
};

namespace detail {

inline std::string idx(long v) { return std::to_string(v); }

inline std::string untwisted_generator(long i, int j) {
    if (i == 0) {
        switch (j) {
            case 0: return "1";
            case 1: return "h(-1)1";
            case 2: return "(e+f)(-1)1";
            default: return "(e-f)(-1)1";
        }
    }
    std::string vi = idx(i);
    if (i == 2) {
        switch (j) {
            case 0: return "v^{2,0}+v^{2,2}";
            case 1: return "v^{2,0}-v^{2,2}";
            case 2: return "v^{2,1}";
            default: return "h(-1)v^{2,1}";
        }
    }
    switch (j) {
        case 0: return "v^{" + vi + ",0}+v^{" + vi + "," + vi + "}";
        case 1: return "v^{" + vi + ",0}-v^{" + vi + "," + vi + "}";
        case 2: return "v^{" + vi + ",1}+v^{" + vi + "," + idx(i - 1) + "}";
        default: return "v^{" + vi + ",1}-v^{" + vi + "," + idx(i - 1) + "}";
    }
}

// top-level dimensions of L(k,i)^{(j)} from the closed basis lists; the two
// k-dependent cases are the ones whose lowest space sits above degree zero
inline long untwisted_top_dim(long k, long i, int j) {
    if (i == 0) return 1;
    if (i == 2) return (j == 3 && k != 2) ? 3 : 1;
    if (i % 4 == 0) return j == 0 ? i / 4 + 1 : i / 4;
    return j == 3 ? (i - 2) / 4 : (i + 2) / 4;
}

}  // namespace detail

inline std::vector<KLabel> orbifold_labels(long k) {
    if (k < 1) throw std::invalid_argument("orbifold_labels: k must be positive");
    std::vector<KLabel> out;
    for (long i = 0; i <= k; ++i) {
        if (i % 2 == 0) {
            for (int j = 0; j < 4; ++j)
                out.push_back(KLabel{KLabel::Kind::UntwistedEven, i, j, 1, +1});
        } else {
            out.push_back(KLabel{KLabel::Kind::UntwistedOdd, i, 0, 1, +1});
        }
    }
    for (int r = 1; r <= 3; ++r) {
        for (long i = 0; 2 * i < k; ++i)
            for (int s : {+1, -1}) out.push_back(KLabel{KLabel::Kind::Twisted, i, 0, r, s});
        if (k % 2 == 0)
            for (int j = 0; j < 4; ++j)
                out.push_back(KLabel{KLabel::Kind::TwistedMid, k / 2, j, r, +1});
    }
    return out;
}

inline Descriptor descriptor(const KLabel& label, long k) {
    using Kind = KLabel::Kind;
    Descriptor d;
    d.label = label;
    std::string ks = detail::idx(k), is = detail::idx(label.i), rs = detail::idx(label.r);
    switch (label.kind) {
        case Kind::UntwistedOdd: {
            if (label.i < 1 || label.i > k || label.i % 2 == 0)
                throw std::invalid_argument("descriptor: bad odd untwisted index");
            d.name = "L(" + ks + "," + is + ")^{+}";
            d.sector = "untwisted";
            d.weight = lowest_conformal_weight(k, label.i);
            d.top_dim = (label.i + 1) / 2;  // one sigma_1-eigenhalf of the top level
            d.generator = "v^{" + is + "," + is + "}";
            break;
        }
        case Kind::UntwistedEven: {
            if (label.i < 0 || label.i > k || label.i % 2 != 0 || label.j < 0 || label.j > 3)
                throw std::invalid_argument("descriptor: bad even untwisted label");
            d.name = "L(" + ks + "," + is + ")^{(" + detail::idx(label.j) + ")}";
            d.sector = "untwisted";
            if (label.i == 0) {
                d.weight = label.j == 0 ? Rational(0) : Rational(1);
            } else if (label.i == 2 && label.j == 3) {
                d.weight = Rational(k + 4, k + 2);
            } else {
                d.weight = lowest_conformal_weight(k, label.i);
            }
            d.top_dim = detail::untwisted_top_dim(k, label.i, label.j);
            d.generator = detail::untwisted_generator(label.i, label.j);
            break;
        }
        case Kind::Twisted: {
            if (label.i < 0 || 2 * label.i >= k)
                throw std::invalid_argument("descriptor: twisted index must satisfy 0 <= i < k/2");
            d.name = "bar-L(" + ks + "," + is + ")^{sigma_" + rs + "," +
                     (label.sign > 0 ? "+" : "-") + "}";
            d.sector = "twisted-sigma_" + rs;
            d.weight = twisted_base_weight(k, label.i);
            if (label.sign > 0) {
                d.top_dim = 1;
                d.generator = "v^{" + rs + "," + is + "," + is + "}";
            } else {
                d.weight += Rational(1, 2);
                d.top_dim = label.i == 0 ? 1 : 2;
                d.generator = "f^{(" + rs + ")}_{-1/2}v^{" + rs + "," + is + "," + is + "}";
            }
            break;
        }
        case Kind::TwistedMid: {
            if (k % 2 != 0 || label.i != k / 2)
                throw std::invalid_argument("descriptor: mid label needs even k and i = k/2");
            std::string ms = detail::idx(k / 2);
            std::string v = "v^{" + rs + "," + ms + "," + ms + "}";
            d.name = "bar-L(" + ks + "," + ms + ")^{sigma_" + rs + ",(" + detail::idx(label.j) +
                     ")}";
            d.sector = "twisted-sigma_" + rs;
            d.weight = twisted_base_weight(k, k / 2);
            switch (label.j) {
                case 0:
                    d.top_dim = 1;
                    d.generator = v;
                    break;
                case 1:
                    d.weight += Rational(1);
                    d.top_dim = k == 2 ? 1 : 2;
                    d.generator = "h^{(" + rs + ")}(-1)" + v;
                    break;
                case 2:
                    d.weight += Rational(1, 2);
                    d.top_dim = 1;
                    d.generator = "(e^{(" + rs + ")}+f^{(" + rs + ")})_{-1/2}" + v;
                    break;
                default:
                    d.weight += Rational(1, 2);
                    d.top_dim = 1;
                    d.generator = "(e^{(" + rs + ")}-f^{(" + rs + ")})_{-1/2}" + v;
                    break;
            }
            break;
        }
    }
    return d;
}

inline std::vector<Descriptor> classify_orbifold(long k) {
    std::vector<Descriptor> out;
    for (const auto& label : orbifold_labels(k)) out.push_back(descriptor(label, k));
    return out;
}

inline long orbifold_count(long k) {
    return k % 2 == 1 ? 11 * (k + 1) / 2 : (11 * k + 32) / 2;
}

struct CommutantEntry {
    std::string name;
    std::string type;  // "orbifold", "nonsplit" or "split"
    Rational weight;
    long top_dim = 0;
    std::string generator;
};

struct CommutantResult {
    long m = 0;
    std::vector<CommutantEntry> entries;
    std::vector<std::string> flags;  // disagreements between list and lift engine
};

inline long commutant_count(long m) { return m % 2 == 1 ? 11 * m + 16 : 8 * m + 32; }

inline CommutantResult classify_commutant(long m) {
    if (m < 4) throw std::invalid_argument("classify_commutant: m must be at least 4");
    CommutantResult out;
    out.m = m;
    long k = 2 * m;

    if (m % 2 == 1) {
        for (const auto& d : classify_orbifold(k))
            out.entries.push_back(CommutantEntry{d.name, "orbifold", d.weight, d.top_dim,
                                                 d.generator});
        return out;
    }

    // m even: nonsplit pairs of untwisted quartet members, split everything
    // through the middle of the spectrum
    for (long i = 0; i <= m - 2; i += 2)
        for (int j = 0; j < 4; ++j) {
            Descriptor lo = descriptor(KLabel{KLabel::Kind::UntwistedEven, i, j, 1, +1}, k);
            Descriptor hi =
                descriptor(KLabel{KLabel::Kind::UntwistedEven, 2 * m - i, j, 1, +1}, k);
            bool lo_first = lo.weight <= hi.weight;
            const Descriptor& low = lo_first ? lo : hi;
            out.entries.push_back(CommutantEntry{lo.name + "+" + hi.name, "nonsplit", low.weight,
                                                 low.top_dim, low.generator});
        }
    for (int j = 0; j < 4; ++j) {
        Descriptor d = descriptor(KLabel{KLabel::Kind::UntwistedEven, m, j, 1, +1}, k);
        for (const char* s : {"+", "-"})
            out.entries.push_back(
                CommutantEntry{"(" + d.name + ")^{" + s + "}", "split", d.weight, d.top_dim,
                               d.generator});
    }
    for (int r = 1; r <= 3; ++r)
        for (long i = 0; i <= m - 2; i += 2)
            for (int tag : {+1, -1}) {
                Descriptor d = descriptor(KLabel{KLabel::Kind::Twisted, i, 0, r, tag}, k);
                for (const char* s : {"+", "-"})
                    out.entries.push_back(
                        CommutantEntry{"(" + d.name + ")^{" + s + "}", "split", d.weight,
                                       d.top_dim, d.generator});
            }
    for (int r = 1; r <= 3; ++r)
        for (int j = 0; j < 4; ++j) {
            Descriptor d = descriptor(KLabel{KLabel::Kind::TwistedMid, m, j, r, +1}, k);
            for (const char* s : {"+", "-"})
                out.entries.push_back(
                    CommutantEntry{"(" + d.name + ")^{" + s + "}", "split", d.weight, d.top_dim,
                                   d.generator});
        }

    // cross-validate the printed list against the lift engine; disagreements
    // are reported, not resolved
    for (const auto& x : all_z2_labels(k)) {
        LiftResult lift = extension_lift(m, x);
        LiftKind expect;
        if (x.i % 2 == 1) expect = LiftKind::NotLiftable;
        else if (x.i == m) expect = LiftKind::Split;
        else expect = LiftKind::NonsplitPair;
        if (lift.kind != expect)
            out.flags.push_back("lift disagreement at " + label_str(x));
        if (expect == LiftKind::NonsplitPair && lift.kind == LiftKind::NonsplitPair) {
            if (lift.partner.i != 2 * m - x.i || lift.partner.twisted != x.twisted)
                out.flags.push_back("unexpected lift partner for " + label_str(x));
        }
    }
    return out;
}

struct CrossCheckReport {
    long k = 0;
    int depth = 0;
    long checked = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Compare every descriptor's lowest weight and top dimension against the
// graded engines truncated at depth D.
inline CrossCheckReport cross_check(long k, int D, RankCache& ranks) {
    CrossCheckReport rep;
    rep.k = k;
    rep.depth = D;
    std::map<long, IsotypicTable> isotables;
    std::map<std::pair<long, int>, TwistedTable> twtables;

    for (const auto& label : orbifold_labels(k)) {
        Descriptor d = descriptor(label, k);
        ++rep.checked;
        auto mismatch = [&](const std::string& what) {
            rep.mismatches.push_back(d.name + ": " + what);
        };
        if (label.kind == KLabel::Kind::UntwistedOdd || label.kind == KLabel::Kind::UntwistedEven) {
            auto it = isotables.find(label.i);
            if (it == isotables.end())
                it = isotables.emplace(label.i, k_isotypic_dims(k, label.i, D)).first;
            const IsotypicTable& table = it->second;
            int slot = label.kind == KLabel::Kind::UntwistedOdd ? 0 : label.j;
            int d0 = -1;
            for (int deg = 0; deg <= D; ++deg)
                if (table.dims[static_cast<std::size_t>(deg)][static_cast<std::size_t>(slot)] >
                    0) {
                    d0 = deg;
                    break;
                }
            if (d0 < 0) {
                mismatch("component invisible up to depth " + std::to_string(D));
                continue;
            }
            Rational engine_weight = lowest_conformal_weight(k, label.i) + Rational(d0);
            long engine_dim =
                table.dims[static_cast<std::size_t>(d0)][static_cast<std::size_t>(slot)];
            if (engine_weight != d.weight) mismatch("weight " + d.weight.str() + " vs engine " +
                                                    engine_weight.str());
            if (engine_dim != d.top_dim)
                mismatch("top_dim " + std::to_string(d.top_dim) + " vs engine " +
                         std::to_string(engine_dim));
        } else {
            auto key = std::make_pair(label.i, label.r);
            auto it = twtables.find(key);
            if (it == twtables.end())
                it = twtables
                         .emplace(key, twisted_component_dims(k, label.i, label.r,
                                                              std::min(2 * D, 4), ranks))
                         .first;
            const TwistedTable& table = it->second;
            int slot;
            if (label.kind == KLabel::Kind::Twisted)
                slot = label.sign > 0 ? 0 : 1;
            else
                slot = label.j;
            auto low = table.lowest(slot);
            if (!low) {
                mismatch("twisted component invisible");
                continue;
            }
            if (*low != d.weight)
                mismatch("weight " + d.weight.str() + " vs engine " + low->str());
            int two_tau = 0;
            long engine_dim = 0;
            for (const auto& [tt, dim] : table.dims[static_cast<std::size_t>(slot)])
                if (dim > 0) {
                    two_tau = tt;
                    engine_dim = dim;
                    break;
                }
            (void)two_tau;
            if (engine_dim != d.top_dim)
                mismatch("top_dim " + std::to_string(d.top_dim) + " vs engine " +
                         std::to_string(engine_dim));
        }
    }
    return rep;
}

}  // namespace kleinorb

// JSON views of the engine outputs. Everything is emitted through ordered
// maps with fixed insertion order so identical queries are bit-identical.
#pragma once

#include <json.hpp>

#include "kleinorb/classify.hpp"
#include "kleinorb/fermion.hpp"
#include "kleinorb/fusion.hpp"
#include "kleinorb/isotypic.hpp"
#include "kleinorb/twist.hpp"

namespace kleinorb {

using Json = nlohmann::ordered_json;

inline Json header(const char* command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

inline Json classify_json(long k) {
    Json j = header("classify");
    j["k"] = k;
    auto mods = classify_orbifold(k);
    j["count"] = mods.size();
    Json arr = Json::array();
    for (const auto& d : mods) {
        Json e;
        e["label"] = d.name;
        e["sector"] = d.sector;
        e["weight"] = d.weight.str();
        e["top_dim"] = d.top_dim;
        e["generator"] = d.generator;
        arr.push_back(std::move(e));
    }
    j["modules"] = std::move(arr);
    return j;
}

inline Json commutant_json(long m) {
    Json j = header("commutant");
    j["m"] = m;
    auto res = classify_commutant(m);
    j["count"] = res.entries.size();
    Json arr = Json::array();
    for (const auto& e : res.entries) {
        Json o;
        o["label"] = e.name;
        o["type"] = e.type;
        o["weight"] = e.weight.str();
        o["top_dim"] = e.top_dim;
        o["generator"] = e.generator;
        arr.push_back(std::move(o));
    }
    j["modules"] = std::move(arr);
    j["flags"] = res.flags;
    return j;
}

inline Json fuse_json(long k, const Z2Label& a, const Z2Label& b) {
    Json j = header("fuse");
    j["k"] = k;
    j["a"] = label_str(a);
    j["b"] = label_str(b);
    Json arr = Json::array();
    for (const auto& x : fuse(a, b, k)) arr.push_back(label_str(x));
    j["result"] = std::move(arr);
    return j;
}

inline Json ring_json(long k) {
    Json j = header("verify-ring");
    j["k"] = k;
    auto rep = verify_ring(k);
    j["commutative"] = rep.commutative;
    j["associative"] = rep.associative;
    j["unit"] = label_str(rep.unit);
    Json sc = Json::array();
    for (const auto& x : rep.simple_currents) sc.push_back(label_str(x));
    j["simple_currents"] = std::move(sc);
    j["ok"] = rep.ok();
    return j;
}

// Full fusion table dump, rows in canonical label order.
inline Json fusion_table_json(long k) {
    Json j = header("fusion-table");
    j["k"] = k;
    Json rows = Json::array();
    auto labels = all_z2_labels(k);
    for (const auto& a : labels)
        for (const auto& b : labels) {
            if (a.twisted && b.twisted) continue;
            Json row;
            row["a"] = label_str(a);
            row["b"] = label_str(b);
            Json out = Json::array();
            for (const auto& x : fuse(a, b, k)) out.push_back(label_str(x));
            row["result"] = std::move(out);
            rows.push_back(std::move(row));
        }
    j["rows"] = std::move(rows);
    return j;
}

inline Json decompose_json(long k, long i, int depth) {
    Json j = header("decompose");
    j["k"] = k;
    j["i"] = i;
    j["depth"] = depth;
    auto table = k_isotypic_dims(k, i, depth);
    j["projective"] = table.projective;
    Json cols = Json::array();
    if (table.projective) {
        cols.push_back("sigma_1:+");
        cols.push_back("sigma_1:-");
    } else {
        for (int l = 0; l < 4; ++l) cols.push_back("chi_" + std::to_string(l));
    }
    j["columns"] = std::move(cols);
    Json rows = Json::array();
    for (const auto& row : table.dims) {
        Json r = Json::array();
        int width = table.projective ? 2 : 4;
        for (int t = 0; t < width; ++t) r.push_back(row[static_cast<std::size_t>(t)]);
        rows.push_back(std::move(r));
    }
    j["dims"] = std::move(rows);
    return j;
}

inline Json twist_json(long k, long i, int r, int depth, RankCache& ranks) {
    Json j = header("twist");
    j["k"] = k;
    j["i"] = i;
    j["r"] = r;
    j["depth"] = depth;
    auto table = twisted_component_dims(k, i, r, 2 * depth, ranks);
    j["quartet"] = table.quartet;
    j["base_weight"] = table.base.str();
    Json comps = Json::array();
    int nslots = table.quartet ? 4 : 2;
    for (int slot = 0; slot < nslots; ++slot) {
        Json c;
        c["component"] = table.quartet ? "(" + std::to_string(slot) + ")"
                                       : (slot == 0 ? "+" : "-");
        auto low = table.lowest(slot);
        c["lowest_weight"] = low ? low->str() : "none";
        Json dims = Json::array();
        for (const auto& [two_tau, dim] : table.dims[static_cast<std::size_t>(slot)]) {
            Json d;
            d["offset"] = Rational(two_tau, 2).str();
            d["dim"] = dim;
            dims.push_back(std::move(d));
        }
        c["dims"] = std::move(dims);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j;
}

inline Json fermion_json(long m, int depth) {
    Json j = header("verify-fermion");
    j["m"] = m;
    j["depth"] = depth;
    auto rep = fermion_verify(m, 2 * depth);
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
        Json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["counterexample"] = c.counterexample;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["ok"] = rep.ok();
    return j;
}

inline Json generators_json(long k, int r, int depth) {
    Json j = header("verify-generators");
    j["k"] = k;
    j["r"] = r;
    j["depth"] = depth;
    auto rep = verify_fixed_generators(k, r, depth);
    j["generators_fixed"] = rep.generators_fixed;
    j["span_dims"] = rep.span_dims;
    j["fixed_dims"] = rep.fixed_dims;
    j["ok"] = rep.ok;
    return j;
}

inline Json crosscheck_json(long k, int depth, RankCache& ranks) {
    Json j = header("cross-check");
    j["k"] = k;
    j["depth"] = depth;
    auto rep = cross_check(k, depth, ranks);
    j["checked"] = rep.checked;
    j["mismatches"] = rep.mismatches;
    j["ok"] = rep.ok();
    return j;
}

}  // namespace kleinorb

// On-disk cache of Gram ranks: one versioned JSON file per (k, i), keyed by
// "d,q". Hits must reproduce recomputation bit-for-bit, which is automatic
// for integer ranks as long as the files are written deterministically.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "kleinorb/affine.hpp"

namespace kleinorb {

class DiskRankStore : public RankStore {
public:
    explicit DiskRankStore(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    std::optional<long> get(long k, long i, int d, int q) override {
        load(k, i);
        const auto& ranks = data_[{k, i}];
        auto it = ranks.find({d, q});
        if (it == ranks.end()) return std::nullopt;
        return it->second;
    }

    void put(long k, long i, int d, int q, long rank) override {
        load(k, i);
        auto& ranks = data_[{k, i}];
        auto [it, fresh] = ranks.emplace(std::make_pair(d, q), rank);
        if (!fresh && it->second != rank) throw std::runtime_error("rank cache inconsistency");
        if (fresh) save(k, i);
    }

    std::filesystem::path file_for(long k, long i) const {
        return dir_ / ("gram_k" + std::to_string(k) + "_i" + std::to_string(i) + ".json");
    }

private:
    void load(long k, long i) {
        if (!loaded_.insert({k, i}).second) return;
        auto path = file_for(k, i);
        auto& ranks = data_[{k, i}];
        std::ifstream in(path);
        if (!in) return;
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.value("schema", 0) != 1) return;  // unknown version: recompute
        for (const auto& [key, value] : j.at("ranks").items()) {
            auto comma = key.find(',');
            int d = std::stoi(key.substr(0, comma));
            int q = std::stoi(key.substr(comma + 1));
            ranks[{d, q}] = value.get<long>();
        }
    }

    void save(long k, long i) const {
        nlohmann::ordered_json j;
        j["schema"] = 1;
        j["k"] = k;
        j["i"] = i;
        nlohmann::ordered_json ranks = nlohmann::ordered_json::object();
        for (const auto& [dq, r] : data_.at({k, i}))
            ranks[std::to_string(dq.first) + "," + std::to_string(dq.second)] = r;
        j["ranks"] = std::move(ranks);
        std::ofstream out(file_for(k, i), std::ios::trunc);
        out << j.dump(2) << "\n";
    }

    std::filesystem::path dir_;
    std::map<std::pair<long, long>, std::map<std::pair<int, int>, long>> data_;
    std::set<std::pair<long, long>> loaded_;
};

}  // namespace kleinorb

#include "cyclefactor/count_table.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cyclefactor {

namespace {

nlohmann::json type_to_json(const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

}  // namespace

const char* source_name(Source s) {
    return s == Source::oracle ? "oracle" : "recurrence";
}

CountTable::CountTable(int n, Source source) : n_(n), source_(source) {
    for (auto& p : partitions_of(n)) entries_.emplace(std::move(p), 0);
}

const Bigint& CountTable::at(const Partition& type) const {
    auto it = entries_.find(type);
    if (it == entries_.end()) {
        throw std::invalid_argument("count table for n=" + std::to_string(n_) +
                                    " has no entry for " + type.to_string());
    }
    return it->second;
}

void CountTable::set(const Partition& type, Bigint value) {
    auto it = entries_.find(type);
    if (it == entries_.end()) {
        throw std::invalid_argument("count table for n=" + std::to_string(n_) +
                                    " has no entry for " + type.to_string());
    }
    it->second = std::move(value);
}

void CountTable::add(const Partition& type, const Bigint& delta) {
    auto it = entries_.find(type);
    if (it == entries_.end()) {
        throw std::invalid_argument("count table for n=" + std::to_string(n_) +
                                    " has no entry for " + type.to_string());
    }
    it->second += delta;
}

Bigint CountTable::total() const {
    Bigint t = 0;
    for (const auto& [type, count] : entries_) t += count;
    return t;
}

bool CountTable::same_counts(const CountTable& other) const {
    return n_ == other.n_ && entries_ == other.entries_;
}

std::string CountTable::to_json() const {
    nlohmann::json out;
    out["n"] = n_;
    out["source"] = source_name(source_);
    auto entries = nlohmann::json::array();
    for (const auto& [type, count] : entries_) {
        entries.push_back({{"type", type_to_json(type)}, {"count", count.str()}});
    }
    out["entries"] = std::move(entries);
    return out.dump();
}

std::string CountTable::to_csv() const {
    std::string out = "type,length,count\n";
    for (const auto& [type, count] : entries_) {
        std::string parts;
        for (size_t i = 0; i < type.parts().size(); ++i) {
            if (i) parts += ' ';
            parts += std::to_string(type.parts()[i]);
        }
        out += parts + "," + std::to_string(type.length()) + "," + count.str() + "\n";
    }
    return out;
}

std::string profile_to_json(int n, const Partition& lambda, const ExceedanceProfile& profile) {
    nlohmann::json out;
    out["n"] = n;
    out["source"] = "oracle";
    out["statistic"] = "by-type-and-exceedance";
    out["lambda"] = type_to_json(lambda);
    auto entries = nlohmann::json::array();
    for (const auto& [key, count] : profile) {
        entries.push_back({{"type", type_to_json(key.first)},
                           {"exceedances", key.second},
                           {"count", count.str()}});
    }
    out["entries"] = std::move(entries);
    return out.dump();
}

}  // namespace cyclefactor

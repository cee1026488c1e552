#include "bihyp/store.hpp"

#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bihyp {

namespace fs = std::filesystem;
using nlohmann::json;

std::string record_to_json_line(const VerdictRecord& rec) {
    json j;
    j["hash"] = rec.hash;
    j["n"] = rec.n;
    j["r"] = rec.r;
    j["edges"] = rec.edges;
    j["sweep_id"] = rec.sweep_id;
    j["status"] = rec.status;
    if (rec.witness) j["witness"] = *rec.witness;
    else j["witness"] = nullptr;
    j["timestamp"] = rec.timestamp;
    j["version"] = rec.version;
    return j.dump();
}

VerdictRecord record_from_json_line(const std::string& line) {
    VerdictRecord rec;
    try {
        json j = json::parse(line);
        rec.hash = j.at("hash").get<std::string>();
        rec.n = j.at("n").get<int>();
        rec.r = j.at("r").get<int>();
        rec.edges = j.at("edges").get<std::vector<Edge>>();
        rec.sweep_id = j.at("sweep_id").get<std::string>();
        rec.status = j.at("status").get<std::string>();
        if (j.contains("witness") && !j["witness"].is_null())
            rec.witness = j["witness"].get<std::vector<int>>();
        rec.timestamp = j.value("timestamp", "");
        rec.version = j.value("version", "");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad verdict record: ") + e.what());
    }
    return rec;
}

namespace {

bool same_verdict(const VerdictRecord& a, const VerdictRecord& b) {
    return a.n == b.n && a.r == b.r && a.edges == b.edges && a.status == b.status;
}

}  // namespace

VerdictStore::VerdictStore(std::string dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
    fs::path log = fs::path(dir_) / "records.jsonl";
    if (!fs::exists(log)) return;
    std::ifstream in(log);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        VerdictRecord rec;
        try {
            rec = record_from_json_line(line);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(log.string() + ":" + std::to_string(lineno) +
                                        ": " + e.what());
        }
        auto it = by_hash_.find(rec.hash);
        if (it == by_hash_.end()) by_hash_.emplace(rec.hash, std::move(rec));
        else if (!same_verdict(it->second, rec))
            throw StoreContradiction(log.string() + ":" + std::to_string(lineno) +
                                     ": conflicting verdicts for class " + rec.hash);
    }
}

void VerdictStore::insert(const VerdictRecord& rec) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_hash_.find(rec.hash);
    if (it != by_hash_.end()) {
        if (same_verdict(it->second, rec)) return;
        throw StoreContradiction("conflicting verdicts for class " + rec.hash + ": stored " +
                                 it->second.status + ", inserting " + rec.status);
    }
    std::ofstream out(fs::path(dir_) / "records.jsonl", std::ios::app);
    if (!out) throw std::runtime_error("cannot append to records.jsonl in " + dir_);
    out << record_to_json_line(rec) << '\n';
    if (!out) throw std::runtime_error("write failed for records.jsonl in " + dir_);
    by_hash_.emplace(rec.hash, rec);
}

const VerdictRecord* VerdictStore::find(const std::string& hash) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_hash_.find(hash);
    return it == by_hash_.end() ? nullptr : &it->second;
}

std::vector<const VerdictRecord*> VerdictStore::records_for_sweep(
    const std::string& sweep_id) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<const VerdictRecord*> out;
    for (const auto& [hash, rec] : by_hash_)
        if (rec.sweep_id == sweep_id) out.push_back(&rec);
    return out;
}

// All sweep summaries live in one diffable document, keyed by sweep id.
void VerdictStore::write_sweep_meta(const SweepSummary& summary) {
    std::lock_guard<std::mutex> lock(mu_);
    fs::path file = fs::path(dir_) / "sweep.meta.json";
    json all = json::object();
    if (std::ifstream in(file); in) {
        try {
            all = json::parse(in);
        } catch (const json::exception& e) {
            throw std::runtime_error(file.string() + " is corrupt: " + e.what());
        }
    }
    all[summary.id] = json::parse(summary_to_json(summary));
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << all.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + file.string());
}

std::optional<std::string> VerdictStore::read_sweep_meta(const std::string& sweep_id) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ifstream in(fs::path(dir_) / "sweep.meta.json");
    if (!in) return std::nullopt;
    json all;
    try {
        all = json::parse(in);
    } catch (const json::exception&) {
        return std::nullopt;
    }
    if (!all.contains(sweep_id)) return std::nullopt;
    return all[sweep_id].dump(2) + "\n";
}

std::string now_iso8601_utc() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace bihyp

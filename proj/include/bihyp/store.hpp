#ifndef BIHYP_STORE_HPP
#define BIHYP_STORE_HPP

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "bihyp/enumeration.hpp"
#include "bihyp/hypergraph.hpp"

namespace bihyp {

struct VerdictRecord {
    std::string hash;  // canonical form hash, hex
    int n = 0;
    int r = 0;
    std::vector<Edge> edges;  // canonical representative, re-solvable
    std::string sweep_id;
    std::string status;  // "colorable" | "uncolorable"
    std::optional<std::vector<int>> witness;
    std::string timestamp;  // ISO 8601 UTC
    std::string version;
};

std::string record_to_json_line(const VerdictRecord& rec);
VerdictRecord record_from_json_line(const std::string& line);

// Raised when an insert disagrees with an already-stored verdict for the
// same class.
struct StoreContradiction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Append-only log (records.jsonl, one JSON object per line) plus a single
// sweep.meta.json keyed by sweep id, with an in-memory index keyed by class
// hash. Re-inserting an identical verdict is a no-op; a conflicting one throws.
class VerdictStore {
public:
    explicit VerdictStore(std::string dir);

    const std::string& dir() const { return dir_; }
    std::size_t record_count() const { return by_hash_.size(); }

    void insert(const VerdictRecord& rec);
    const VerdictRecord* find(const std::string& hash) const;
    std::vector<const VerdictRecord*> records_for_sweep(const std::string& sweep_id) const;

    void write_sweep_meta(const SweepSummary& summary);
    std::optional<std::string> read_sweep_meta(const std::string& sweep_id) const;

private:
    std::string dir_;
    std::map<std::string, VerdictRecord> by_hash_;
    mutable std::mutex mu_;
};

std::string now_iso8601_utc();

}  // namespace bihyp

#endif

#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rotorlab/polynomial.hpp"

namespace rotorlab {

// Check families the driver knows how to run. "all" in a config expands to
// every entry applicable to the boundary condition.
extern const std::vector<std::string> kAllChecks;

struct VerificationConfig {
    Bc bc = Bc::PbcEven;
    std::vector<int> sizes;          // defaults per bc when empty
    int samples = 3;
    std::uint64_t seed = 42;
    std::set<std::string> checks;    // empty = all
    int sequence_max = 6;

    std::vector<int> effective_sizes() const;
    bool wants(const std::string& check) const;
};

struct CheckRecord {
    std::string check;
    std::string bc;
    int size = 0;           // 0 for size-independent checks
    std::string name;       // human-readable instance label
    bool pass = false;
    std::string detail;     // witness on failure
    std::map<std::string, std::string> values;  // exact values as strings
    double wall_ms = 0.0;
};

struct VerificationReport {
    VerificationConfig config;
    std::vector<CheckRecord> records;

    bool all_passed() const;
    // Deterministic given (config, seed); wall times are only included on
    // request since they vary run to run.
    std::string to_json(bool with_timings = false) const;
};

VerificationReport run_verification(const VerificationConfig& config);

// Worker pool bound: ROTORLAB_THREADS when set, hardware concurrency
// otherwise, always at least 1.
int worker_count();

// Sequence tables as (label, values) in the ranges the verification suite
// freezes; used by the CLI table generator and the sequences check.
std::vector<std::pair<std::string, std::vector<Rat>>> sequence_tables(int max_n);

// CSV rendering of sequence_tables.
std::string sequence_tables_csv(int max_n);

// JSON dumps for the CLI.
std::string ground_state_json(const GroundState& gs);
std::string transfer_json(const TransferMatrix& tm);

} // namespace rotorlab

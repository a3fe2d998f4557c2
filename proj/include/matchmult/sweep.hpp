#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace matchmult {

struct SweepConfig {
    std::string campaign;
    int n_min = 1;
    /// 0 picks the campaign default.
    int n_max = 0;
    /// 0 uses every available thread.
    int jobs = 0;
    std::uint64_t seed = 1;
    /// Random graphs added to campaigns that use them; -1 picks the default.
    int random_graphs = -1;
    int converse_cap = 4;
};

struct Violation {
    std::string subject;
    std::string check;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct SweepReport {
    std::string campaign;
    int n_min = 0;
    int n_max = 0;
    std::uint64_t seed = 0;
    std::size_t subjects = 0;
    /// check name -> number of evaluations
    std::map<std::string, std::size_t> checks;
    std::vector<Violation> violations;
    /// wall time; not part of the JSON so reports stay byte-identical
    double seconds = 0;

    bool ok() const { return violations.empty(); }
    /// Adds counts and appends violations. Followed by finalize(), the
    /// result does not depend on merge order.
    void merge(const SweepReport& other);
    /// Sorts violations by (subject, check, detail).
    void finalize();
    nlohmann::json to_json() const;
};

struct CampaignInfo {
    std::string name;
    std::string description;
    int default_max_n;
    int cap;
};

const std::vector<CampaignInfo>& campaigns();

/// Throws UnknownCampaign, or BadSize for a range outside 1..cap.
SweepReport run_sweep(const SweepConfig& config);
/// Same checks in a single thread, in subject order.
SweepReport run_sweep_serial(const SweepConfig& config);

}  // namespace matchmult

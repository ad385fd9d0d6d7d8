#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfib/identities.hpp"

namespace qfib {

inline constexpr const char* kToolName = "qfib";
inline constexpr const char* kToolVersion = "0.1.0";

/// One rectangular block of parameter value lists.
using ParamBlock = std::map<std::string, std::vector<long>>;

/// An identity plus one or more parameter blocks (defaults need unions,
/// e.g. a wide k=1 block next to a narrower k=2,3 block). Parameters an
/// identity does not take are rejected at validation, not ignored.
struct GridSpec {
    IdentityId identity{};
    std::vector<ParamBlock> blocks;
    ShiftConvention mode = ShiftConvention::flat;
};

/// Ordered parameter names an identity takes.
const std::vector<std::string>& identity_params(IdentityId id);

/// Default (acceptance-grade) grid for an identity.
GridSpec default_grid(IdentityId id);

/// Parses "a..b" (inclusive, negatives allowed), "v1,v2,...", or a single
/// integer. Throws std::invalid_argument on malformed or empty input.
std::vector<long> parse_range(const std::string& text);

/// Validates a spec and fills unset parameters from the identity's fill
/// template. Throws std::invalid_argument on unknown parameters, empty
/// lists, or out-of-domain values (k < 1 and the like).
GridSpec resolve_grid(const GridSpec& spec);

/// Expands a resolved spec into concrete instances in grid order. Combos
/// violating a dependent bound (j > k+1 for minor_ratio, j > k for
/// d_relations) are skipped.
std::vector<std::vector<std::pair<std::string, long>>> expand_instances(const GridSpec& spec);

struct RunReport {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    GridSpec grid;
    std::vector<IdentityReport> results;
    std::int64_t total_elapsed_ms = 0;

    int count(VerifyStatus s) const;
    /// Process exit contract: success iff no residual and no error entries.
    bool all_zero() const;
};

/// Runs the verifier over the grid. Instances run concurrently when
/// workers > 1; result order is grid order regardless of completion order.
RunReport run_grid(Sequences& seq, const GridSpec& spec, int workers = 1);

/// Single-instance dispatch by identity id.
IdentityReport run_instance(Sequences& seq, IdentityId id,
                            const std::vector<std::pair<std::string, long>>& params,
                            ShiftConvention mode);

nlohmann::json to_json(const IdentityReport& r);
IdentityReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

/// Timing-free text rendering (one line per result plus a summary line);
/// byte-identical across repeated identical invocations.
std::string to_text(const RunReport& r);

} // namespace qfib

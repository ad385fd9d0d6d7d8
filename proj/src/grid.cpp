#include "qfib/grid.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace qfib {

namespace {

using Params = std::vector<std::pair<std::string, long>>;

const std::map<IdentityId, std::vector<std::string>>& signatures() {
    static const std::map<IdentityId, std::vector<std::string>> table = {
        {IdentityId::classical_1_4, {"n", "k"}},
        {IdentityId::qbinomial_1_9, {"n"}},
        {IdentityId::theorem1, {"n", "k"}},
        {IdentityId::corollary1, {"n", "k"}},
        {IdentityId::lemma1, {"n", "m", "ell"}},
        {IdentityId::corollary2, {"n", "k"}},
        {IdentityId::theorem2, {"n", "m", "ell", "k"}},
        {IdentityId::lemma2, {"n", "m", "k"}},
        {IdentityId::lemma3, {"ell", "k"}},
        {IdentityId::d_relations, {"m", "k", "j"}},
        {IdentityId::eq_2_26, {"n", "k"}},
        {IdentityId::minor_ratio, {"n", "k", "j"}},
        {IdentityId::theorem3, {"n", "k", "ell"}},
        {IdentityId::eq_2_33, {"n", "ell"}},
    };
    return table;
}

std::vector<long> iota_range(long lo, long hi) {
    std::vector<long> v;
    for (long x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

// Hard per-parameter domain (independent of other parameters).
void check_domain(IdentityId id, const std::string& name, long value) {
    if ((name == "k" || name == "m" || name == "ell") && value < 1) {
        throw std::invalid_argument(name + " must be >= 1 (got " + std::to_string(value) + ")");
    }
    if (name == "j") {
        const long lo = id == IdentityId::d_relations ? 0 : 1;
        if (value < lo) {
            throw std::invalid_argument("j must be >= " + std::to_string(lo) + " (got " +
                                        std::to_string(value) + ")");
        }
    }
    if (name == "n" && id == IdentityId::qbinomial_1_9 && value < 0) {
        throw std::invalid_argument("n must be >= 0 for qbinomial_1_9");
    }
}

// Combos skipped because a parameter depends on another one's value.
bool dependent_ok(IdentityId id, const Params& p) {
    auto get = [&](const char* name) {
        for (const auto& [k, v] : p) {
            if (k == name) return v;
        }
        return 0L;
    };
    if (id == IdentityId::minor_ratio) return get("j") <= get("k") + 1;
    if (id == IdentityId::d_relations) return get("j") <= get("k");
    return true;
}

// Used to complete a partially specified user block.
ParamBlock fill_template(IdentityId id) {
    switch (id) {
        case IdentityId::classical_1_4:
        case IdentityId::theorem1: return {{"n", iota_range(-3, 10)}, {"k", iota_range(1, 4)}};
        case IdentityId::qbinomial_1_9: return {{"n", iota_range(0, 12)}};
        case IdentityId::corollary1: return {{"n", iota_range(1, 8)}, {"k", iota_range(1, 3)}};
        case IdentityId::lemma1:
            return {{"n", iota_range(-3, 6)}, {"m", iota_range(1, 4)}, {"ell", iota_range(1, 4)}};
        case IdentityId::corollary2: return {{"n", iota_range(0, 10)}, {"k", iota_range(1, 5)}};
        case IdentityId::theorem2:
            return {{"n", iota_range(-1, 3)},
                    {"m", iota_range(1, 2)},
                    {"ell", iota_range(1, 2)},
                    {"k", iota_range(1, 3)}};
        case IdentityId::lemma2:
            return {{"n", iota_range(-1, 3)}, {"m", iota_range(1, 2)}, {"k", iota_range(1, 3)}};
        case IdentityId::lemma3: return {{"ell", iota_range(1, 2)}, {"k", iota_range(1, 3)}};
        case IdentityId::d_relations:
            return {{"m", iota_range(1, 3)}, {"k", iota_range(1, 3)}, {"j", iota_range(0, 3)}};
        case IdentityId::eq_2_26: return {{"n", iota_range(-3, 10)}, {"k", iota_range(1, 3)}};
        case IdentityId::minor_ratio:
            return {{"n", {4, 5}}, {"k", iota_range(1, 3)}, {"j", iota_range(1, 4)}};
        case IdentityId::theorem3:
            return {{"n", iota_range(4, 8)}, {"k", iota_range(1, 2)}, {"ell", iota_range(1, 2)}};
        case IdentityId::eq_2_33: return {{"n", iota_range(2, 8)}, {"ell", iota_range(1, 3)}};
    }
    throw std::logic_error("unreachable");
}

} // namespace

const std::vector<std::string>& identity_params(IdentityId id) {
    return signatures().at(id);
}

GridSpec default_grid(IdentityId id) {
    GridSpec g;
    g.identity = id;
    switch (id) {
        case IdentityId::theorem2:
            g.blocks = {{{"n", iota_range(-2, 4)}, {"m", iota_range(1, 3)},
                         {"ell", iota_range(1, 3)}, {"k", {1}}},
                        {{"n", iota_range(-1, 3)}, {"m", iota_range(1, 2)},
                         {"ell", iota_range(1, 2)}, {"k", {2, 3}}}};
            return g;
        case IdentityId::lemma2:
            g.blocks = {{{"n", iota_range(-2, 4)}, {"m", iota_range(1, 3)}, {"k", {1}}},
                        {{"n", iota_range(-1, 3)}, {"m", iota_range(1, 2)}, {"k", {2, 3}}}};
            return g;
        case IdentityId::lemma3:
            g.blocks = {{{"ell", iota_range(1, 3)}, {"k", {1}}},
                        {{"ell", iota_range(1, 2)}, {"k", {2, 3}}}};
            return g;
        case IdentityId::eq_2_33:
            g.blocks = {{{"ell", {1}}, {"n", iota_range(2, 8)}},
                        {{"ell", {2}}, {"n", iota_range(4, 10)}},
                        {{"ell", {3}}, {"n", iota_range(6, 12)}}};
            return g;
        case IdentityId::theorem3:
            g.blocks = {{{"n", iota_range(2, 8)}, {"k", {1}}, {"ell", iota_range(1, 3)}},
                        {{"n", iota_range(4, 8)}, {"k", {2}}, {"ell", iota_range(1, 2)}}};
            return g;
        default:
            g.blocks = {fill_template(id)};
            return g;
    }
}

std::vector<long> parse_range(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty range");
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("empty range: " + text);
        return iota_range(lo, hi);
    }
    std::vector<long> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("malformed list: " + text);
        std::size_t used = 0;
        const long v = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument("malformed integer: " + item);
        vals.push_back(v);
    }
    if (vals.empty()) throw std::invalid_argument("empty list: " + text);
    return vals;
}

GridSpec resolve_grid(const GridSpec& spec) {
    GridSpec out;
    out.identity = spec.identity;
    out.mode = spec.mode;
    const auto& sig = identity_params(spec.identity);
    if (spec.blocks.empty() ||
        (spec.blocks.size() == 1 && spec.blocks.front().empty())) {
        out.blocks = default_grid(spec.identity).blocks;
        return out;
    }
    const ParamBlock tmpl = fill_template(spec.identity);
    for (const ParamBlock& block : spec.blocks) {
        ParamBlock resolved;
        for (const auto& [name, values] : block) {
            if (std::find(sig.begin(), sig.end(), name) == sig.end()) {
                throw std::invalid_argument("identity " +
                                            std::string(to_string(spec.identity)) +
                                            " does not take parameter '" + name + "'");
            }
            if (values.empty()) throw std::invalid_argument("empty range for '" + name + "'");
            for (long v : values) check_domain(spec.identity, name, v);
            resolved[name] = values;
        }
        for (const auto& name : sig) {
            if (!resolved.contains(name)) resolved[name] = tmpl.at(name);
        }
        out.blocks.push_back(std::move(resolved));
    }
    return out;
}

std::vector<Params> expand_instances(const GridSpec& spec) {
    const auto& sig = identity_params(spec.identity);
    std::vector<Params> out;
    for (const ParamBlock& block : spec.blocks) {
        std::vector<std::size_t> idx(sig.size(), 0);
        while (true) {
            Params p;
            for (std::size_t d = 0; d < sig.size(); ++d) {
                p.emplace_back(sig[d], block.at(sig[d])[idx[d]]);
            }
            if (dependent_ok(spec.identity, p)) out.push_back(std::move(p));
            // odometer, last parameter fastest
            std::size_t d = sig.size();
            while (d > 0) {
                --d;
                if (++idx[d] < block.at(sig[d]).size()) break;
                idx[d] = 0;
                if (d == 0) goto block_done;
            }
            if (sig.empty()) break;
        }
    block_done:;
    }
    if (out.empty()) throw std::invalid_argument("grid expands to no valid instances");
    return out;
}

IdentityReport run_instance(Sequences& seq, IdentityId id, const Params& params,
                            ShiftConvention mode) {
    auto get = [&](const char* name) {
        for (const auto& [k, v] : params) {
            if (k == name) return v;
        }
        throw std::invalid_argument(std::string("missing parameter '") + name + "'");
    };
    switch (id) {
        case IdentityId::classical_1_4:
            return verify_classical_1_4(seq, get("n"), static_cast<int>(get("k")));
        case IdentityId::qbinomial_1_9: return verify_qbinomial_theorem(seq, get("n"));
        case IdentityId::theorem1:
            return verify_theorem1(seq, get("n"), static_cast<int>(get("k")), mode);
        case IdentityId::corollary1:
            return verify_corollary1(seq, get("n"), static_cast<int>(get("k")), mode);
        case IdentityId::lemma1:
            return verify_lemma1(seq, get("n"), static_cast<int>(get("m")),
                                 static_cast<int>(get("ell")));
        case IdentityId::corollary2:
            return decompose_shifted(seq, get("n"), static_cast<int>(get("k"))).report;
        case IdentityId::theorem2:
            return verify_theorem2(seq, get("n"), static_cast<int>(get("m")),
                                   static_cast<int>(get("ell")), static_cast<int>(get("k")));
        case IdentityId::lemma2:
            return verify_lemma2(seq, get("n"), static_cast<int>(get("m")),
                                 static_cast<int>(get("k")));
        case IdentityId::lemma3:
            return verify_lemma3(seq, static_cast<int>(get("ell")),
                                 static_cast<int>(get("k")));
        case IdentityId::d_relations:
            return verify_d_relations(seq, static_cast<int>(get("m")),
                                      static_cast<int>(get("k")), static_cast<int>(get("j")));
        case IdentityId::eq_2_26:
            return verify_vanishing(seq, get("n"), static_cast<int>(get("k")));
        case IdentityId::minor_ratio:
            return verify_minor_ratio(seq, get("n"), static_cast<int>(get("k")),
                                      static_cast<int>(get("j")));
        case IdentityId::theorem3:
            return verify_theorem3(seq, get("n"), static_cast<int>(get("k")),
                                   static_cast<int>(get("ell")), mode);
        case IdentityId::eq_2_33:
            return verify_eq_2_33(seq, get("n"), static_cast<int>(get("ell")));
    }
    throw std::logic_error("unreachable");
}

int RunReport::count(VerifyStatus s) const {
    int n = 0;
    for (const auto& r : results) {
        if (r.status == s) ++n;
    }
    return n;
}

bool RunReport::all_zero() const {
    return count(VerifyStatus::residual) == 0 && count(VerifyStatus::error) == 0;
}

RunReport run_grid(Sequences& seq, const GridSpec& spec, int workers) {
    RunReport report;
    report.grid = resolve_grid(spec);
    const auto instances = expand_instances(report.grid);
    report.results.resize(instances.size());
    const auto start = std::chrono::steady_clock::now();

    const long count = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic) num_threads(workers) if (workers > 1)
    for (long i = 0; i < count; ++i) {
        report.results[static_cast<std::size_t>(i)] = run_instance(
            seq, report.grid.identity, instances[static_cast<std::size_t>(i)],
            report.grid.mode);
    }

    report.total_elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    return report;
}

// ----------------------------------------------------------------------- json

nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    return nlohmann::json{{"identity", to_string(r.id)},
                          {"params", params},
                          {"status", to_string(r.status)},
                          {"residual", r.residual},
                          {"elapsed_ms", r.elapsed_ms}};
}

IdentityReport report_from_json(const nlohmann::json& j) {
    IdentityReport r;
    r.id = identity_from_string(j.at("identity").get<std::string>());
    for (const auto& name : identity_params(r.id)) {
        if (j.at("params").contains(name)) {
            r.params.emplace_back(name, j.at("params").at(name).get<long>());
        }
    }
    const std::string status = j.at("status").get<std::string>();
    if (status == "zero") r.status = VerifyStatus::zero;
    else if (status == "residual") r.status = VerifyStatus::residual;
    else if (status == "error") r.status = VerifyStatus::error;
    else throw std::invalid_argument("unknown status: " + status);
    r.residual = j.at("residual").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

nlohmann::json to_json(const RunReport& r) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& block : r.grid.blocks) {
        nlohmann::json b = nlohmann::json::object();
        for (const auto& [name, values] : block) b[name] = values;
        blocks.push_back(b);
    }
    nlohmann::json results = nlohmann::json::array();
    for (const auto& rep : r.results) results.push_back(to_json(rep));
    return nlohmann::json{
        {"tool", r.tool},
        {"version", r.version},
        {"identity", to_string(r.grid.identity)},
        {"mode", to_string(r.grid.mode)},
        {"grid", blocks},
        {"results", results},
        {"summary",
         {{"zero", r.count(VerifyStatus::zero)},
          {"residual", r.count(VerifyStatus::residual)},
          {"error", r.count(VerifyStatus::error)},
          {"total_elapsed_ms", r.total_elapsed_ms}}}};
}

RunReport run_report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.grid.identity = identity_from_string(j.at("identity").get<std::string>());
    const std::string mode = j.at("mode").get<std::string>();
    r.grid.mode = mode == "staircase" ? ShiftConvention::staircase : ShiftConvention::flat;
    for (const auto& b : j.at("grid")) {
        ParamBlock block;
        for (const auto& [name, values] : b.items()) {
            block[name] = values.get<std::vector<long>>();
        }
        r.grid.blocks.push_back(std::move(block));
    }
    for (const auto& rep : j.at("results")) r.results.push_back(report_from_json(rep));
    r.total_elapsed_ms = j.at("summary").at("total_elapsed_ms").get<std::int64_t>();
    return r;
}

std::string to_text(const RunReport& r) {
    std::ostringstream os;
    for (const auto& rep : r.results) {
        os << to_string(rep.id);
        for (const auto& [name, value] : rep.params) os << ' ' << name << '=' << value;
        os << ": " << to_string(rep.status);
        if (rep.status != VerifyStatus::zero) os << ' ' << rep.residual;
        os << '\n';
    }
    os << to_string(r.grid.identity) << ": zero=" << r.count(VerifyStatus::zero)
       << " residual=" << r.count(VerifyStatus::residual)
       << " error=" << r.count(VerifyStatus::error) << '\n';
    return os.str();
}

} // namespace qfib

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qfib/grid.hpp"
#include "qfib/parallel.hpp"

using namespace qfib;

TEST_CASE("range parsing") {
    CHECK(parse_range("1..4") == std::vector<long>{1, 2, 3, 4});
    CHECK(parse_range("-3..-1") == std::vector<long>{-3, -2, -1});
    CHECK(parse_range("7") == std::vector<long>{7});
    CHECK(parse_range("2,5,-1") == std::vector<long>{2, 5, -1});
    CHECK_THROWS_AS(parse_range(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("4..1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
}

TEST_CASE("unused parameters are rejected") {
    GridSpec spec;
    spec.identity = IdentityId::lemma1;
    spec.blocks = {{{"k", {1}}}};
    CHECK_THROWS_AS(resolve_grid(spec), std::invalid_argument);

    spec.identity = IdentityId::qbinomial_1_9;
    spec.blocks = {{{"n", {-1, 0}}}};
    CHECK_THROWS_AS(resolve_grid(spec), std::invalid_argument); // n < 0 out of domain

    spec.blocks = {{{"n", {}}}};
    CHECK_THROWS_AS(resolve_grid(spec), std::invalid_argument); // empty list
}

TEST_CASE("defaults fill unset parameters") {
    GridSpec spec;
    spec.identity = IdentityId::theorem1;
    spec.blocks = {{{"k", {2}}}};
    const GridSpec resolved = resolve_grid(spec);
    REQUIRE(resolved.blocks.size() == 1);
    CHECK(resolved.blocks[0].at("k") == std::vector<long>{2});
    CHECK(resolved.blocks[0].at("n").size() == 14); // -3..10

    const GridSpec deflt = resolve_grid(GridSpec{IdentityId::eq_2_33, {}, {}});
    CHECK(deflt.blocks.size() == 3); // one block per step value
}

TEST_CASE("dependent bounds skip invalid combos") {
    GridSpec spec;
    spec.identity = IdentityId::minor_ratio;
    spec.blocks = {{{"n", {4}}, {"k", {1, 2}}, {"j", {1, 2, 3}}}};
    const auto instances = expand_instances(resolve_grid(spec));
    // k=1: j in {1,2}; k=2: j in {1,2,3}
    CHECK(instances.size() == 5);
    for (const auto& inst : instances) {
        long k = 0, j = 0;
        for (const auto& [name, v] : inst) {
            if (name == "k") k = v;
            if (name == "j") j = v;
        }
        CHECK(j <= k + 1);
    }
}

TEST_CASE("grid order is deterministic and last parameter varies fastest") {
    GridSpec spec;
    spec.identity = IdentityId::theorem1;
    spec.blocks = {{{"n", {1, 2}}, {"k", {1, 2}}}};
    const auto instances = expand_instances(resolve_grid(spec));
    REQUIRE(instances.size() == 4);
    CHECK(instances[0] == std::vector<std::pair<std::string, long>>{{"n", 1}, {"k", 1}});
    CHECK(instances[1] == std::vector<std::pair<std::string, long>>{{"n", 1}, {"k", 2}});
    CHECK(instances[3] == std::vector<std::pair<std::string, long>>{{"n", 2}, {"k", 2}});
}

TEST_CASE("parallel grid run equals the sequential one") {
    Sequences seq;
    GridSpec spec;
    spec.identity = IdentityId::theorem1;
    spec.blocks = {{{"n", parse_range("-3..6")}, {"k", {1, 2, 3}}}};

    const RunReport serial = run_grid(seq, spec, 1);
    Sequences seq2;
    const RunReport parallel = run_grid(seq2, spec, 4);

    REQUIRE(serial.results.size() == parallel.results.size());
    CHECK(serial.all_zero());
    for (std::size_t i = 0; i < serial.results.size(); ++i) {
        CHECK(serial.results[i].id == parallel.results[i].id);
        CHECK(serial.results[i].params == parallel.results[i].params);
        CHECK(serial.results[i].status == parallel.results[i].status);
        CHECK(serial.results[i].residual == parallel.results[i].residual);
    }
}

TEST_CASE("exit-code contract") {
    Sequences seq;
    GridSpec good;
    good.identity = IdentityId::lemma1;
    good.blocks = {{{"n", {2}}, {"m", {1}}, {"ell", {1}}}};
    const RunReport ok = run_grid(seq, good, 1);
    CHECK(ok.all_zero());
    CHECK(ok.results.at(0).residual == "0");

    GridSpec bad;
    bad.identity = IdentityId::theorem2;
    bad.blocks = {{{"n", {1}}, {"m", {1}}, {"ell", {2}}, {"k", {2}}}};
    const RunReport nz = run_grid(seq, bad, 1);
    CHECK(!nz.all_zero());
    CHECK(nz.count(VerifyStatus::residual) == 1);
}

TEST_CASE("json round-trip") {
    Sequences seq;
    GridSpec spec;
    spec.identity = IdentityId::lemma2;
    spec.blocks = {{{"n", {0, 1}}, {"m", {1}}, {"k", {1, 2}}}};
    const RunReport report = run_grid(seq, spec, 1);

    const nlohmann::json j = to_json(report);
    const RunReport back = run_report_from_json(j);
    CHECK(back.tool == report.tool);
    CHECK(back.version == report.version);
    CHECK(back.grid.identity == report.grid.identity);
    CHECK(back.grid.blocks == report.grid.blocks);
    REQUIRE(back.results.size() == report.results.size());
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        CHECK(to_json(back.results[i]) == to_json(report.results[i]));
    }

    // frozen field names
    const nlohmann::json one = to_json(report.results[0]);
    for (const char* field : {"identity", "params", "status", "residual", "elapsed_ms"}) {
        CHECK(one.contains(field));
    }
}

TEST_CASE("text output is byte-identical across runs") {
    GridSpec spec;
    spec.identity = IdentityId::corollary2;
    spec.blocks = {{{"n", parse_range("0..6")}, {"k", {1, 2, 3}}}};
    Sequences a, b;
    const std::string t1 = to_text(run_grid(a, spec, 1));
    const std::string t2 = to_text(run_grid(b, spec, 2));
    CHECK(t1 == t2);
    CHECK(t1.find("corollary2 n=0 k=1: zero") != std::string::npos);
}

TEST_CASE("workers knob") {
    set_max_workers(0);
    CHECK(max_workers() == 1);
    set_max_workers(3);
    CHECK(max_workers() == 3);
    set_max_workers(1);
}

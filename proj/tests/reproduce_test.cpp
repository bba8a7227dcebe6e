#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "netgrowth/reproduce.hpp"

using namespace netgrowth;

TEST_SUITE_BEGIN("reproduce");

namespace {

const ReproCheck& find_check(const ReproReport& report, const std::string& id) {
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [&](const ReproCheck& c) { return c.id == id; });
    REQUIRE(it != report.checks.end());
    return *it;
}

int count_status(const ReproReport& report, CheckStatus status) {
    return static_cast<int>(std::count_if(
        report.checks.begin(), report.checks.end(),
        [&](const ReproCheck& c) { return c.status == status; }));
}

} // namespace

TEST_CASE("full reproduction is green") {
    const ReproReport report = reproduce(ReproScope::all);
    CHECK(report.checks.size() > 30);
    CHECK_FALSE(report.any_fail());
    CHECK(count_status(report, CheckStatus::fail) == 0);
    // Exactly the three documented typo rows: the two 3742-year error rows
    // and the productivity growth figure.
    CHECK(count_status(report, CheckStatus::paper_discrepancy) == 3);
}

TEST_CASE("error-table scope flags the two typo rows") {
    const ReproReport report = reproduce(ReproScope::table_1_1);
    CHECK(report.checks.size() == 8);
    CHECK(find_check(report, "table-1-1/upper/100y").status == CheckStatus::pass);
    CHECK(find_check(report, "table-1-1/lower/839y").status == CheckStatus::pass);

    const auto& upper = find_check(report, "table-1-1/upper/3742y");
    CHECK(upper.status == CheckStatus::paper_discrepancy);
    CHECK(upper.computed == doctest::Approx(0.7469).epsilon(0.002));
    CHECK(upper.expected == doctest::Approx(0.07469));

    const auto& lower = find_check(report, "table-1-1/lower/3742y");
    CHECK(lower.status == CheckStatus::paper_discrepancy);
    CHECK(lower.computed == doctest::Approx(0.826).epsilon(0.002));
    CHECK(lower.expected == doctest::Approx(0.0826));
}

TEST_CASE("entropy table scope has the nine rows") {
    const ReproReport report = reproduce(ReproScope::table_2);
    CHECK(report.checks.size() == 9);
    CHECK(count_status(report, CheckStatus::pass) == 9);
    CHECK(find_check(report, "table-2/brain").computed ==
          doctest::Approx(14.71).epsilon(0.001));
}

TEST_CASE("economics scope records the recomputed growth figure") {
    const ReproReport report = reproduce(ReproScope::econ);
    const auto& growth = find_check(report, "econ/growth-per-year");
    CHECK(growth.status == CheckStatus::paper_discrepancy);
    CHECK(growth.computed == doctest::Approx(2.585).epsilon(0.005 / 2.585));
    CHECK(growth.expected == doctest::Approx(2.53));
    CHECK(find_check(report, "econ/eta-us-1880").status == CheckStatus::pass);
    CHECK(find_check(report, "econ/eta-us-1980").status == CheckStatus::pass);
}

TEST_CASE("swadesh scope includes the concurrence gap") {
    const ReproReport report = reproduce(ReproScope::swadesh);
    CHECK(count_status(report, CheckStatus::fail) == 0);
    const auto& gap = find_check(report, "swadesh/concurrence-gap");
    CHECK(gap.computed < 0.1);
    CHECK(gap.status == CheckStatus::pass);
}

TEST_CASE("dating scope within fifty years") {
    const ReproReport report = reproduce(ReproScope::table_5);
    CHECK(report.checks.size() == 4);
    CHECK(count_status(report, CheckStatus::pass) == 4);
    CHECK(find_check(report, "table-5/swadesh_n1").computed ==
          doctest::Approx(235544).epsilon(50.0 / 235544));
}

TEST_CASE("scope names parse") {
    CHECK(parse_repro_scope("all") == ReproScope::all);
    CHECK(parse_repro_scope("table-1-1") == ReproScope::table_1_1);
    CHECK(parse_repro_scope("table-116") == ReproScope::table_116);
    CHECK(parse_repro_scope("econ") == ReproScope::econ);
    CHECK_THROWS_AS(parse_repro_scope("table-9"), ParseError);
}

TEST_CASE("a drifted expectation turns into a FAIL row") {
    // Rebuild the registry with one corrupted expected value; the harness
    // must notice rather than stay green by construction.
    Registry broken;
    for (const auto& record : builtin_registry().records()) {
        const std::string& key = record.key;
        if (const auto* scalar = std::get_if<double>(&record.payload)) {
            const double value = key == "expected.eta.brain" ? *scalar + 1.0 : *scalar;
            broken.add_scalar(key, value, record.provenance);
        } else if (const auto* pair = std::get_if<GrowthPair>(&record.payload)) {
            broken.add_pair(key, *pair, record.provenance);
        } else if (const auto* metrics = std::get_if<NetworkMetrics>(&record.payload)) {
            broken.add_metrics(key, *metrics, record.provenance);
        } else if (const auto* row = std::get_if<LongevityRecord>(&record.payload)) {
            broken.add_longevity(key, *row, record.provenance);
        }
    }
    const ReproReport report = reproduce(ReproScope::table_2, broken);
    CHECK(report.any_fail());
    CHECK(find_check(report, "table-2/brain").status == CheckStatus::fail);
    CHECK(count_status(report, CheckStatus::fail) == 1);
}

TEST_CASE("reproduction is pure") {
    const ReproReport a = reproduce(ReproScope::all);
    const ReproReport b = reproduce(ReproScope::all);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].id == b.checks[i].id);
        CHECK(a.checks[i].computed == b.checks[i].computed);
        CHECK(a.checks[i].status == b.checks[i].status);
    }
}

TEST_SUITE_END();

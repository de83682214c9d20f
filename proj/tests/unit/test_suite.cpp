#include <doctest.h>

#include <algorithm>

#include "gl6/error.hpp"
#include "gl6/suite.hpp"

using namespace gl6;

namespace {

SuiteOptions small() {
    SuiteOptions o;
    o.embeddings = 20;
    o.convolution_samples = 40;
    o.order = 4;
    o.lemma_random_samples = 2000;
    o.claim_triples = 20000;
    return o;
}

}  // namespace

TEST_CASE("every group passes at reduced sizes") {
    const auto opt = small();
    for (int k = 1; k <= kSuiteGroups; ++k)
        for (const auto& r : run_group(k, opt)) {
            CHECK_MESSAGE(r.passed, r.name << ": " << r.detail);
            const auto prefix = (k < 10 ? "0" : "") + std::to_string(k) + ".";
            CHECK(r.name.rfind(prefix, 0) == 0);
        }
    CHECK_THROWS_AS(run_group(0, opt), DomainError);
}

TEST_CASE("suite output is sorted and reproducible") {
    const auto opt = small();
    const auto a = run_suite(opt), b = run_suite(opt);
    CHECK(std::is_sorted(a.begin(), a.end(), [](const CheckRecord& x, const CheckRecord& y) { return x.name < y.name; }));
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].detail == b[i].detail);
    }
}

TEST_CASE("synthetic tables") {
    const auto t2 = synthetic_gl2_table(42), t3 = synthetic_gl3_table(42, false), r3 = synthetic_gl3_table(42, true);
    CHECK(t2.ap.at(7) == FieldValue{3, 0});
    CHECK(t3.ap.at(7) == FieldValue{1, 1});
    for (const auto& [p, v] : r3.ap) CHECK(v.y == boost::rational<std::int64_t>(0));
    CHECK(synthetic_gl2_table(42).ap == t2.ap);
    CHECK_FALSE(synthetic_gl2_table(43).ap == t2.ap);
}

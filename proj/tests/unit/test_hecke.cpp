#include <doctest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "gl6/error.hpp"
#include "gl6/hecke.hpp"

using namespace gl6;
namespace fs = std::filesystem;

namespace {

const fs::path kData = GL6_TEST_DATA;

HeckeTable fixture(const char* name) { return load_table(kData / name); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

FieldValue fv(std::int64_t x, std::int64_t y) { return FieldValue{x, y}; }

/// Serves tests/data/remote under /tables and a few failure modes, on an
/// ephemeral port, for the lifetime of the object.
class LocalServer {
public:
    LocalServer() {
        server_.set_mount_point("/tables", (kData / "remote").string());
        server_.Get("/renamed/synthetic-gl3-other.json", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(slurp(kData / "remote" / "synthetic-gl3-q61.json"), "application/json");
        });
        server_.Get("/broken/synthetic-gl3-q61.json", [](const httplib::Request&, httplib::Response& res) {
            res.set_content("{ not json", "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        for (int i = 0; i < 200 && !server_.is_running(); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
    ~LocalServer() {
        server_.stop();
        thread_.join();
    }
    std::string url(const std::string& prefix) const { return "http://127.0.0.1:" + std::to_string(port_) + prefix; }

private:
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

struct TempDir {
    fs::path path;
    TempDir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("gl6-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("fields and values") {
    CHECK(parse_field("Q").rational());
    CHECK(parse_field("Q(i)").disc == -1);
    CHECK(parse_field("Q(sqrt(-11))").disc == -11);
    CHECK(format_field(parse_field("Q(sqrt(-15))")) == "Q(sqrt(-15))");
    CHECK_THROWS_AS(parse_field("Q(sqrt(4))"), ParseError);
    CHECK_THROWS_AS(parse_field("R"), ParseError);

    const auto qi = parse_field("Q(i)");
    CHECK(field_mul(qi, fv(1, 1), fv(1, -1)) == fv(2, 0));
    CHECK(field_mul(parse_field("Q(sqrt(-3))"), fv(0, 1), fv(0, 1)) == fv(-3, 0));
    CHECK(field_conj(qi, fv(1, 1)) == fv(1, -1));
    CHECK(field_conj(parse_field("Q"), fv(2, 0)) == fv(2, 0));
    CHECK(format_value(qi, fv(1, 1)) == "1+1*i");
    CHECK(format_value(parse_field("Q(sqrt(-11))"), fv(2, -1)) == "2-1*sqrt(-11)");
    CHECK(std::abs(field_to_complex(parse_field("Q(sqrt(-3))"), fv(1, 1)) - std::complex<double>(1, std::sqrt(3.0))) < 1e-12);
}

TEST_CASE("table files") {
    const auto t = fixture("synthetic_gl3_planted.tbl");
    CHECK(t.label == "synthetic-gl3-planted");
    CHECK(t.group == FormGroup::GL3);
    CHECK(t.level == 89);
    CHECK(t.field.disc == -1);
    CHECK(t.ap.at(7) == fv(1, 1));
    CHECK(t.ramified(89));
    CHECK(t.ramified_primes() == std::set<std::int64_t>{89});
    CHECK(parse_table(serialize_table(t)).ap == t.ap);
    CHECK(table_from_json(table_to_json(t)).ap == t.ap);

    try {
        fixture("malformed_value.tbl");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(fixture("duplicate_prime.tbl"), InconsistentInput);
    CHECK_THROWS_AS(parse_table("label=x group=GL2 level=5 weight=4 field=Q\n4 1 0\n"), InconsistentInput);
    CHECK_THROWS_AS(parse_table("label=x group=GL2 level=5 weight=4 field=Q\n3 1 1\n"), InconsistentInput);
    CHECK_THROWS_AS(parse_table("label=x group=GL4 level=5 weight=4 field=Q\n"), ParseError);
    CHECK_THROWS_AS(parse_table("label=x group=GL2 level=5 weight=4\n"), ParseError);
    CHECK_THROWS_AS(parse_table("2 1 0\n"), ParseError);
    CHECK_THROWS_AS(load_table(kData / "no-such-file.tbl"), Error);
}

TEST_CASE("tensor coefficients") {
    const auto t3 = fixture("synthetic_gl3_planted.tbl");
    const auto t2 = fixture("synthetic_gl2_w4_n5.tbl");
    CHECK(tensor_field(t3, t2).disc == -1);
    CHECK(tensor_ap(t3, t2, 7) == fv(3, 3));
    CHECK(tensor_ap(t3, t2, 2) == fv(-4, 0));
    CHECK_THROWS_AS(tensor_ap(t3, t2, 5), DomainError);    // ramified for the GL2 table
    CHECK_THROWS_AS(tensor_ap(t3, t2, 1009), DomainError); // not tabulated
    CHECK_THROWS_AS(tensor_ap(t2, t3, 7), DomainError);    // groups swapped
    CHECK_THROWS_AS(tensor_ap(t3, fixture("synthetic_gl3_allreal.tbl"), 7), DomainError);
}

TEST_CASE("bridge to Euler factors on every fixture pair") {
    const auto t2 = fixture("synthetic_gl2_w4_n5.tbl");
    for (const char* name : {"synthetic_gl3_planted.tbl", "synthetic_gl3_allreal.tbl", "synthetic_gl3_gaussian.tbl",
                             "synthetic_gl3_rational.tbl"}) {
        const auto t3 = fixture(name);
        const auto b = bridge_check(t3, t2);
        CHECK_MESSAGE(b.agree, name);
        CHECK(b.primes_checked > 5);
        // The Satake roots reproduce the Hecke eigenvalue as their sum.
        for (const auto& [p, a] : t3.ap) {
            if (t3.ramified(p)) continue;
            const auto f = satake_factor(t3, p);
            CHECK(f.degree() == 3);
            CHECK(std::abs(f.trace() - field_to_complex(t3.field, a)) < 1e-6 * std::max(1.0, std::abs(f.trace())));
        }
    }
    const auto f2 = satake_factor(t2, 7);
    CHECK(std::abs(f2.trace() - std::complex<double>(3, 0)) < 1e-9);
}

TEST_CASE("witness search") {
    const auto t2 = fixture("synthetic_gl2_w4_n5.tbl");
    const auto planted = nonselfdual_witness(fixture("synthetic_gl3_planted.tbl"), t2, {});
    REQUIRE(planted);
    CHECK(planted->p == 7);
    CHECK(planted->ap_gl3 == fv(1, 1));
    CHECK(planted->ap_gl3_conj == fv(1, -1));
    CHECK(planted->ap_gl2 == fv(3, 0));

    const auto gaussian = nonselfdual_witness(fixture("synthetic_gl3_gaussian.tbl"), t2, {});
    REQUIRE(gaussian);
    CHECK(gaussian->p == 13);

    CHECK_FALSE(nonselfdual_witness(fixture("synthetic_gl3_allreal.tbl"), t2, {}).has_value());
    const auto skipped = nonselfdual_witness(fixture("synthetic_gl3_planted.tbl"), t2, {7});
    REQUIRE(skipped);
    CHECK(skipped->p == 11);
    CHECK_THROWS_AS(nonselfdual_witness(fixture("synthetic_gl3_rational.tbl"), t2, {}), DomainError);
}

TEST_CASE("conductor and constants") {
    CHECK(conductor_product(5, 53) == 351125);
    CHECK(conductor_product(1, 1) == 1);
    CHECK_THROWS_AS(conductor_product(6, 128), DomainError);
    CHECK_THROWS_AS(conductor_product(0, 7), DomainError);
    CHECK_THROWS_AS(conductor_product(3'000'000, 7), OverflowError);
    const auto& c = reference_constants();
    CHECK(c.t1 == std::vector<std::int64_t>{53, 61, 79, 89});
    CHECK(c.t2 == std::vector<std::int64_t>{128, 160, 205});
    CHECK(c.weight4_levels == std::vector<std::int64_t>{5, 7, 13, 17, 19, 23});
    CHECK(format_constants(c).rfind("T1 = {53, 61, 79, 89}\n", 0) == 0);
}

TEST_CASE("JSON documents") {
    const auto t = table_from_json(slurp(kData / "remote" / "synthetic-gl3-q61.json"));
    CHECK(t.label == "synthetic-gl3-q61");
    CHECK(t.field.disc == -3);
    CHECK(t.ap.at(5) == fv(2, 5));
    CHECK_THROWS_AS(table_from_json(slurp(kData / "remote" / "synthetic-gl3-drift.json")), SchemaError);
    CHECK_THROWS_AS(table_from_json("[]"), SchemaError);
    CHECK_THROWS_AS(table_from_json("{"), SchemaError);
    CHECK(table_from_json(R"({"label":"x","group":"GL2","level":5,"weight":4,"field":"Q",
                               "coefficients":[{"p":2,"a":["-1/2",0]}]})")
              .ap.at(2) == FieldValue{boost::rational<std::int64_t>(-1, 2), 0});
}

TEST_CASE("remote fetch with a cache") {
    LocalServer server;
    TempDir cache;
    RemoteSource src{server.url("/tables"), cache.path, false, 5};

    const auto t = fetch_remote(src, "synthetic-gl3-q61");
    CHECK(t.level == 61);
    CHECK(fs::exists(cache.path / "synthetic-gl3-q61.json"));

    // Warm cache: offline works and no server is needed.
    RemoteSource offline{"http://127.0.0.1:1", cache.path, true, 1};
    CHECK(fetch_remote(offline, "synthetic-gl3-q61").ap == t.ap);
    CHECK_THROWS_AS(fetch_remote(offline, "synthetic-gl3-missing"), UnavailableError);

    CHECK_THROWS_AS(fetch_remote(src, "synthetic-gl3-drift"), SchemaError);
    CHECK_FALSE(fs::exists(cache.path / "synthetic-gl3-drift.json"));
    CHECK_THROWS_AS(fetch_remote(src, "synthetic-gl3-missing"), NetworkError);
    CHECK_THROWS_AS(fetch_remote(src, "../etc/passwd"), DomainError);

    RemoteSource renamed{server.url("/renamed"), cache.path, false, 5};
    CHECK_THROWS_AS(fetch_remote(renamed, "synthetic-gl3-other"), SchemaError);
    TempDir other;
    RemoteSource broken{server.url("/broken"), other.path, false, 5};
    CHECK_THROWS_AS(fetch_remote(broken, "synthetic-gl3-q61"), SchemaError);
    RemoteSource https{"https://example.invalid", other.path, false, 1};
    CHECK_THROWS_AS(fetch_remote(https, "x"), NetworkError);
}

TEST_CASE("cache directory override") {
    ::setenv("GL6CUSP_CACHE_DIR", "/tmp/gl6-cache-override", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/gl6-cache-override"));
    ::unsetenv("GL6CUSP_CACHE_DIR");
    ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/xdg/gl6cusp"));
}

#include "doctest.h"
#include "matchmult/errors.hpp"
#include "matchmult/sweep.hpp"

using namespace matchmult;

namespace {

template <class F>
void expect_error(ErrorCode code, F&& f) {
    try {
        f();
        FAIL("expected " << to_string(code));
    } catch (const Error& e) {
        CHECK(e.code() == code);
    }
}

SweepConfig config(const std::string& campaign, int n_min, int n_max, int jobs = 0) {
    SweepConfig c;
    c.campaign = campaign;
    c.n_min = n_min;
    c.n_max = n_max;
    c.jobs = jobs;
    return c;
}

}  // namespace

TEST_CASE("bad configurations are rejected") {
    expect_error(ErrorCode::UnknownCampaign, [] { run_sweep(config("nope", 1, 3)); });
    expect_error(ErrorCode::BadSize, [] { run_sweep(config("interlacing", 0, 3)); });
    expect_error(ErrorCode::BadSize, [] { run_sweep(config("interlacing", 5, 4)); });
    expect_error(ErrorCode::BadSize, [] { run_sweep(config("interlacing", 1, 13)); });
    expect_error(ErrorCode::BadSize, [] { run_sweep_serial(config("forest-converse", 1, 8)); });
}

TEST_CASE("every campaign has a default range inside its cap") {
    for (const auto& c : campaigns()) {
        CAPTURE(c.name);
        CHECK(c.default_max_n >= 1);
        CHECK(c.default_max_n <= c.cap);
        CHECK_FALSE(c.description.empty());
    }
}

TEST_CASE("default ranges are used when n_max is 0") {
    const auto r = run_sweep(config("forest-converse", 1, 0));
    CHECK(r.n_max == 5);
    // 8 trees on at most 5 vertices, unordered pairs with repetition
    CHECK(r.subjects == 36);
    CHECK(r.ok());
}

TEST_CASE("main-theorem over trees up to 8 vertices") {
    const auto r = run_sweep(config("main-theorem", 1, 8));
    CHECK(r.subjects == 48);
    CHECK(r.checks.at("biconditional") > 0);
    CHECK(r.checks.at("converse") > 0);
    CHECK(r.ok());
}

TEST_CASE("small campaigns report no violations") {
    for (const char* name : {"identities", "interlacing", "gallai", "stability", "eigenvector"}) {
        CAPTURE(name);
        const auto r = run_sweep(config(name, 1, 7));
        CHECK(r.subjects > 0);
        CHECK_FALSE(r.checks.empty());
        CHECK(r.ok());
    }
    const auto paths = run_sweep(config("paths", 2, 25));
    CHECK(paths.subjects == 24);
    CHECK(paths.ok());
}

TEST_CASE("parallel runs reproduce the serial report") {
    const auto serial = run_sweep_serial(config("main-theorem", 1, 7)).to_json().dump();
    for (int jobs : {1, 2, 3}) {
        CAPTURE(jobs);
        CHECK(run_sweep(config("main-theorem", 1, 7, jobs)).to_json().dump() == serial);
    }
    const auto ser = run_sweep_serial(config("stability", 1, 6)).to_json().dump();
    CHECK(run_sweep(config("stability", 1, 6, 2)).to_json().dump() == ser);
}

TEST_CASE("seed changes the random part only") {
    auto a = config("identities", 1, 6);
    auto b = a;
    b.seed = 99;
    const auto ra = run_sweep(a), rb = run_sweep(b);
    CHECK(ra.subjects == rb.subjects);
    CHECK(ra.to_json()["seed"] == 1);
    CHECK(rb.to_json()["seed"] == 99);
    CHECK(ra.ok());
    CHECK(rb.ok());
}

TEST_CASE("merge order does not matter after finalize") {
    SweepReport a, b;
    a.checks["x"] = 2;
    a.subjects = 1;
    a.violations.push_back({"t2", "x", "bad"});
    b.checks["x"] = 3;
    b.checks["y"] = 1;
    b.subjects = 2;
    b.violations.push_back({"t1", "y", "worse"});

    SweepReport ab, ba;
    ab.merge(a);
    ab.merge(b);
    ab.finalize();
    ba.merge(b);
    ba.merge(a);
    ba.finalize();
    CHECK(ab.to_json() == ba.to_json());
    CHECK(ab.checks.at("x") == 5);
    CHECK(ab.subjects == 3);
    CHECK(ab.violations.front().subject == "t1");
    CHECK_FALSE(ab.ok());
    CHECK(ab.to_json()["ok"] == false);
}

TEST_CASE("report JSON has a stable shape") {
    const auto j = run_sweep(config("paths", 1, 5)).to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["campaign"] == "paths");
    CHECK(j["n_min"] == 1);
    CHECK(j["n_max"] == 5);
    CHECK(j["subjects"] == 5);
    CHECK(j["violations"].is_array());
    CHECK(j["ok"] == true);
    CHECK_FALSE(j.contains("seconds"));
}

#include <doctest.h>

#include <cstdlib>

#include "qschub/verify.hpp"

using namespace qschub;

TEST_CASE("suites pass at small bounds") {
    std::vector<std::string> lines;
    VerifyOptions opts;
    opts.threads = 2;
    opts.sink = [&](const std::string& s) { lines.push_back(s); };

    for (const SuiteReport& rep : {verify_pentagon(5, opts), verify_pc_numeric(4, opts),
                                   verify_sd_numeric(5, opts), verify_t_numeric(3, opts),
                                   verify_lift(8, opts)}) {
        CAPTURE(rep.suite);
        CHECK(rep.ok());
        CHECK(rep.checked > 0);
    }
    for (const SuiteReport& rep : verify_props(5, opts)) {
        CAPTURE(rep.suite);
        CHECK(rep.ok());
        CHECK(rep.checked > 0);
    }
    CHECK(lines.empty());
}

TEST_CASE("thread and worker counts do not change totals") {
    VerifyOptions one;
    one.threads = 1;
    VerifyOptions four;
    four.threads = 4;
    CHECK(verify_pentagon(5, one).checked == verify_pentagon(5, four).checked);
    CHECK(verify_sd_numeric(4, one).checked == verify_sd_numeric(4, four).checked);
}

TEST_CASE("thread count from the environment") {
    ::setenv("QSCHUB_THREADS", "3", 1);
    CHECK(default_thread_count() == 3);
    ::unsetenv("QSCHUB_THREADS");
    CHECK(default_thread_count() >= 1);
}

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "imbalance/ddt.hpp"
#include "imbalance/parallel.hpp"

using namespace imbalance;

TEST_CASE("worker count honours the environment") {
    setenv("IMBALANCE_THREADS", "3", 1);
    CHECK(worker_count() == 3);
    setenv("IMBALANCE_THREADS", "0", 1);
    CHECK(worker_count() >= 1);
    setenv("IMBALANCE_THREADS", "junk", 1);
    CHECK(worker_count() >= 1);
    unsetenv("IMBALANCE_THREADS");
    CHECK(worker_count() >= 1);
}

TEST_CASE("parallel_for visits every index once") {
    for (const char* threads : {"1", "4", "7"}) {
        setenv("IMBALANCE_THREADS", threads, 1);
        std::vector<std::atomic<int>> hits(1003);
        parallel_for(0, hits.size(), [&](std::size_t i) { hits[i].fetch_add(1); });
        for (auto& h : hits) CHECK(h.load() == 1);
        parallel_for(5, 5, [&](std::size_t) { FAIL("empty range ran"); });
    }
    unsetenv("IMBALANCE_THREADS");
}

TEST_CASE("exceptions from workers reach the caller") {
    setenv("IMBALANCE_THREADS", "4", 1);
    CHECK_THROWS_AS(parallel_for(0, 1000, [](std::size_t i) {
                        if (i == 777) throw std::runtime_error("boom");
                    }),
                    std::runtime_error);
    unsetenv("IMBALANCE_THREADS");
}

TEST_CASE("results do not depend on the thread count") {
    auto g = parse_group("2 2 2 2 2 2 2 2");
    auto f = random_function(g, g, 99);
    setenv("IMBALANCE_THREADS", "1", 1);
    DDTable one(f);
    setenv("IMBALANCE_THREADS", "5", 1);
    DDTable many(f);
    unsetenv("IMBALANCE_THREADS");
    for (Element a = 0; a < 256; ++a)
        for (Element b = 0; b < 256; ++b) CHECK(one(a, b) == many(a, b));
}

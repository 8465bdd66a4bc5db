#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "schedsim/policy.hpp"

using namespace schedsim;

TEST_CASE("parse_policy round-trips the five spellings") {
    CHECK(std::holds_alternative<Fcfs>(parse_policy("fcfs")));
    CHECK(std::holds_alternative<Sjf>(parse_policy("sjf")));
    CHECK(std::get<RoundRobin>(parse_policy("rr:5")).quantum == 5);
    CHECK_FALSE(std::get<PriorityPolicy>(parse_policy("priority")).preemptive);
    CHECK(std::get<PriorityPolicy>(parse_policy("priority:preemptive")).preemptive);

    for (const char* s : {"fcfs", "sjf", "rr:5", "priority", "priority:preemptive"})
        CHECK(policy_name(parse_policy(s)) == s);

    CHECK_THROWS_AS(parse_policy("rr:0"), SimError);
    CHECK_THROWS_AS(parse_policy("rr:abc"), SimError);
    CHECK_THROWS_AS(parse_policy("srtf"), SimError);
}

TEST_CASE("select_next under SJF picks the shortest remaining, pid breaks ties") {
    const std::vector<ReadyEntry> ready = {
        {0, 0, 12, {}, 0}, {1, 0, 2, {}, 1}, {2, 0, 3, {}, 2},
        {3, 0, 2, {}, 3}, {4, 0, 6, {}, 4}};
    CHECK(select_next(ready, 0, Sjf{}) == 1); // P1 and P3 tie at 2; P1 wins by pid
}

TEST_CASE("select_next singleton under every policy") {
    const std::vector<ReadyEntry> ready = {{7, 0, 4, 2, 9}};
    CHECK(select_next(ready, 0, Fcfs{}) == 7);
    CHECK(select_next(ready, 0, Sjf{}) == 7);
    CHECK(select_next(ready, 0, RoundRobin{3}) == 7);
    CHECK(select_next(ready, 0, PriorityPolicy{}) == 7);
}

TEST_CASE("select_next under Priority breaks rank ties by pid") {
    const std::vector<ReadyEntry> ready = {
        {0, 0, 12, 3, 0}, {2, 0, 3, 3, 1}, {3, 0, 2, 4, 2}};
    CHECK(select_next(ready, 0, PriorityPolicy{}) == 0);
}

TEST_CASE("select_next FCFS/RR take the head of the queue") {
    // enqueue order deliberately differs from pid order
    const std::vector<ReadyEntry> ready = {
        {5, 0, 9, {}, 2}, {1, 0, 1, {}, 0}, {3, 0, 4, {}, 1}};
    CHECK(select_next(ready, 0, Fcfs{}) == 1);
    CHECK(select_next(ready, 0, RoundRobin{5}) == 1);
}

TEST_CASE("select_next on empty set throws") {
    CHECK_THROWS_AS(select_next({}, 0, Fcfs{}), SimError);
}

TEST_CASE("should_preempt fires only for preemptive priority with a better rank") {
    const ReadyEntry running{0, 0, 10, 3, 0};
    const ReadyEntry better{1, 4, 2, 1, 1};
    const ReadyEntry equal{2, 4, 2, 3, 2};

    CHECK(should_preempt(running, better, PriorityPolicy{true}));
    CHECK_FALSE(should_preempt(running, equal, PriorityPolicy{true}));
    CHECK_FALSE(should_preempt(running, better, PriorityPolicy{false}));

    const ReadyEntry short_job{1, 4, 1, {}, 1};
    CHECK_FALSE(should_preempt(running, short_job, Sjf{}));
    CHECK_FALSE(should_preempt(running, short_job, Fcfs{}));
    CHECK_FALSE(should_preempt(running, short_job, RoundRobin{1}));
}

TEST_CASE("time_slice exists only for round robin") {
    CHECK(time_slice(RoundRobin{5}) == 5);
    CHECK(time_slice(RoundRobin{1}) == 1);
    CHECK_FALSE(time_slice(Fcfs{}).has_value());
    CHECK_FALSE(time_slice(Sjf{}).has_value());
    CHECK_FALSE(time_slice(PriorityPolicy{true}).has_value());
}

namespace {

std::vector<int> drain_order(std::vector<ReadyEntry> ready, const PolicySpec& policy) {
    std::vector<int> order;
    while (!ready.empty()) {
        const int pid = select_next(ready, 0, policy);
        order.push_back(pid);
        ready.erase(std::find_if(ready.begin(), ready.end(),
                                 [pid](const ReadyEntry& e) { return e.pid == pid; }));
    }
    return order;
}

} // namespace

TEST_CASE("degenerate ties make SJF and Priority match FCFS order") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<ReadyEntry> ready;
        const int n = 2 + static_cast<int>(rng() % 6);
        for (int i = 0; i < n; ++i)
            ready.push_back({i, static_cast<long>(i), 4, 2, static_cast<long>(i)});
        std::shuffle(ready.begin(), ready.end(), rng);

        const auto fcfs = drain_order(ready, Fcfs{});
        CHECK(drain_order(ready, Sjf{}) == fcfs);       // equal bursts
        CHECK(drain_order(ready, PriorityPolicy{}) == fcfs); // equal priorities
    }
}

TEST_CASE("select_next is deterministic") {
    const std::vector<ReadyEntry> ready = {
        {0, 0, 5, 2, 3}, {1, 1, 5, 1, 1}, {2, 2, 3, 2, 0}};
    for (const PolicySpec policy :
         {PolicySpec{Fcfs{}}, PolicySpec{Sjf{}}, PolicySpec{RoundRobin{2}},
          PolicySpec{PriorityPolicy{}}}) {
        const int first = select_next(ready, 0, policy);
        for (int i = 0; i < 5; ++i)
            CHECK(select_next(ready, 0, policy) == first);
    }
}

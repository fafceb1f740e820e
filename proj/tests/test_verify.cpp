#include "doctest.h"

#include <cmath>

#include "jr/generate.hpp"
#include "jr/verify.hpp"

#include "fixtures.hpp"

using namespace jr;

TEST_CASE("uncovered_supporters on the adversarial fixture") {
    approval_election e = fixture_example2(10); // n=100, m=20, ell=9
    candidate_id c_last = 9;                    // the candidate shared with every block

    CHECK(uncovered_supporters(e, candidate_set{}, c_last) == 9);
    CHECK(uncovered_supporters(e, candidate_set{{9}}, 0) == 9);
    for (int c = 0; c < e.m(); ++c)
        CHECK(uncovered_supporters(e, candidate_set::full(e.m()), c) == 0);
    CHECK_THROWS_AS(uncovered_supporters(e, candidate_set{}, 20), std::out_of_range);
}

TEST_CASE("is_justifying on the adversarial fixture") {
    approval_election e = fixture_example2(10);
    CHECK(is_justifying(e, candidate_set{{9}}));
    CHECK(!is_justifying(e, candidate_set{}));
    CHECK(is_justifying_bruteforce(fixture_example2(3), candidate_set{{2}}));
}

TEST_CASE("no deficient candidate makes the empty set justifying") {
    // 4 voters, k=2: threshold is 2, every candidate has one supporter
    approval_election e(4, 4, 2, {{0}, {1}, {2}, {3}});
    CHECK(is_justifying(e, candidate_set{}));
    CHECK(is_justifying_bruteforce(e, candidate_set{}));
}

TEST_CASE("is_jr_committee gates on size") {
    approval_election e = fixture_example1(5, 8, 4); // n=20
    candidate_set right({0, 1, 2, 3, 4});
    CHECK(is_jr_committee(e, right));
    candidate_set small({0, 1, 2, 3});
    CHECK(is_justifying(e, small) == false); // last block uncovered
    candidate_set justifying_small({0, 1, 2, 3, 4});
    CHECK(is_jr_committee(e, justifying_small));
    // a justifying group of the wrong size is not a committee
    approval_election e2 = fixture_example2(10);
    CHECK(is_justifying(e2, candidate_set{{9}}));
    CHECK(!is_jr_committee(e2, candidate_set{{9}}));
}

TEST_CASE("verifier agrees with the brute-force oracle") {
    split_mix64 rng(501);
    int checked = 0;
    for (int t = 0; t < 150; ++t) {
        approval_election e = jr::testing::random_election(rng);
        candidate_set w = jr::testing::random_subset(rng, e.m());
        CHECK(is_justifying(e, w) == is_justifying_bruteforce(e, w));
        ++checked;
    }
    CHECK(checked == 150);
}

TEST_CASE("justifying is monotone under supersets") {
    split_mix64 rng(77);
    for (int t = 0; t < 100; ++t) {
        approval_election e = jr::testing::random_election(rng);
        candidate_set w = jr::testing::random_subset(rng, e.m());
        if (!is_justifying(e, w)) continue;
        candidate_set bigger = w;
        for (int c = 0; c < e.m(); ++c)
            if (!bigger.contains(c) && rng.next_double() < 0.5) bigger.insert(c);
        CHECK(is_justifying(e, bigger));
    }
}

TEST_CASE("the full candidate set always justifies") {
    split_mix64 rng(78);
    for (int t = 0; t < 100; ++t) {
        approval_election e = jr::testing::random_election(rng);
        CHECK(is_justifying(e, candidate_set::full(e.m())));
    }
}

TEST_CASE("threshold_tau paper values") {
    CHECK(threshold_tau(0.24, 10) == 4); // raw value ~3.19
    CHECK(threshold_tau(0.05, 10) == 0); // p <= 1/k
    CHECK(threshold_tau(0.17, 15) == 6); // raw value ~5.03
    CHECK_THROWS_AS(threshold_tau(0.0, 10), std::domain_error);
    CHECK_THROWS_AS(threshold_tau(1.0, 10), std::domain_error);
    CHECK_THROWS_AS(threshold_tau(-0.3, 10), std::domain_error);
}

TEST_CASE("threshold_tau is the least s with p(1-p)^s < 1/k") {
    auto f = [](double p, int s) { return p * std::pow(1.0 - p, s); };
    for (int k : {2, 3, 5, 10, 15, 20}) {
        for (int i = 1; i < 1000; ++i) {
            double p = i * 0.001;
            int tau = threshold_tau(p, k);
            double target = 1.0 / k;
            // skip numerically degenerate boundary points
            if (std::abs(f(p, tau) - target) < 1e-9) continue;
            if (tau > 0 && std::abs(f(p, tau - 1) - target) < 1e-9) continue;
            CHECK(f(p, tau) < target);
            if (tau > 0) CHECK(f(p, tau - 1) >= target);
        }
    }
}

TEST_CASE("threshold_tau never exceeds ceil(k/2)") {
    for (int k : {2, 3, 4, 5, 8, 10, 15, 20}) {
        int worst = 0;
        for (int i = 1; i < 1000; ++i)
            worst = std::max(worst, threshold_tau(i * 0.001, k));
        CHECK(worst <= (k + 1) / 2);
    }
}

TEST_CASE("bruteforce guard") {
    approval_election e(21, 2, 1,
                        std::vector<std::vector<candidate_id>>(21, {0}));
    CHECK_THROWS_AS(is_justifying_bruteforce(e, candidate_set{}),
                    std::invalid_argument);
}

#include "doctest.h"

#include <algorithm>
#include <set>

#include "jr/committee.hpp"
#include "jr/exact.hpp"
#include "jr/generate.hpp"
#include "jr/greedy.hpp"
#include "jr/verify.hpp"

#include "fixtures.hpp"

using namespace jr;

namespace {

gender_assignment random_genders(split_mix64& rng, int m) {
    gender_assignment g;
    for (int c = 0; c < m; ++c)
        g.labels.push_back(rng.next_double() < 0.5 ? gender::male : gender::female);
    return g;
}

bool has_both(const candidate_set& w, const gender_assignment& g) {
    bool male = false, female = false;
    for (candidate_id c : w)
        (g.of(c) == gender::male ? male : female) = true;
    return male && female;
}

} // namespace

TEST_CASE("extend: lowest-index fill on the adversarial fixture") {
    approval_election e = fixture_example2(10); // k=10
    candidate_set g({9});
    candidate_set w = extend_to_committee(e, g, fill_policy::lowest_index);
    CHECK(w.members() ==
          std::vector<candidate_id>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(is_jr_committee(e, w));
}

TEST_CASE("extend: a full-size group comes back unchanged") {
    approval_election e = fixture_example1(5, 8, 4);
    candidate_set g({0, 1, 2, 3, 4});
    CHECK(extend_to_committee(e, g, fill_policy::lowest_index) == g);
}

TEST_CASE("extend: gender fill reaches zero imbalance with enough stock") {
    // 12 candidates, k=10; group of 4 (3M/1F); 5+ of each gender available
    approval_election e = gen_ic(40, 12, 10, 0.5, 5);
    candidate_set g = greedy_cc(e, greedy_cc_mode::stop_when_justifying);
    REQUIRE(g.size() <= 4);
    gender_assignment genders;
    for (int c = 0; c < 12; ++c)
        genders.labels.push_back(c % 2 == 0 ? gender::male : gender::female);
    candidate_set w = extend_to_committee(e, g, fill_policy::gender_balance, &genders);
    CHECK(imbalance(w, genders) == 0);
    CHECK(is_jr_committee(e, w));
}

TEST_CASE("extend: precondition violations") {
    approval_election e = fixture_example2(10);
    CHECK_THROWS_AS(extend_to_committee(e, candidate_set{}, fill_policy::lowest_index),
                    std::invalid_argument); // empty set is not justifying here
    CHECK_THROWS_AS(extend_to_committee(e, candidate_set{{9}},
                                        fill_policy::gender_balance, nullptr),
                    std::invalid_argument);
}

TEST_CASE("imbalance on the gender-tension fixture") {
    auto [e, genders] = fixture_example3(8); // males 0..6, females 7..13
    candidate_set balanced({0, 1, 2, 3, 7, 8, 9, 10});
    CHECK(imbalance(balanced, genders) == 0);
    CHECK(!is_jr_committee(e, balanced));

    candidate_set all_male({0, 1, 2, 3, 4, 5, 6});
    CHECK(imbalance(all_male, genders) == 7);

    candidate_set jr_committee({0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(is_jr_committee(e, jr_committee));
    CHECK(imbalance(jr_committee, genders) == 6);
}

TEST_CASE("constructive committees on the worst-case instance") {
    approval_election e = fixture_example1(5, 8, 4);
    auto committees = jr_committees_constructive(e);
    CHECK(committees.size() == 4);

    std::set<candidate_set> expected;
    for (candidate_id y : {4, 5, 6, 7})
        expected.insert(candidate_set({0, 1, 2, 3, y}));
    std::set<candidate_set> got(committees.begin(), committees.end());
    CHECK(got == expected);
    for (const auto& w : committees) CHECK(is_jr_committee(e, w));
}

TEST_CASE("constructive committees when m equals k") {
    approval_election e(4, 2, 2, {{0}, {0}, {1}, {1}});
    auto committees = jr_committees_constructive(e);
    REQUIRE(committees.size() == 1);
    CHECK(committees[0] == candidate_set({0, 1}));
    CHECK(is_jr_committee(e, committees[0]));
}

TEST_CASE("constructive committees need every candidate approved") {
    approval_election e(4, 3, 2, {{0}, {0}, {1}, {1}});
    CHECK_THROWS_AS(jr_committees_constructive(e), std::invalid_argument);
}

TEST_CASE("constructive committees on random instances") {
    split_mix64 rng(600);
    int done = 0;
    for (std::uint64_t t = 0; done < 40; ++t) {
        approval_election e = gen_ic(20, 8, 3, 0.45, derive_seed(600, t));
        bool all = true;
        for (int c = 0; c < e.m(); ++c)
            if (e.supporters(c).none()) all = false;
        if (!all) continue;
        auto committees = jr_committees_constructive(e);
        CHECK(static_cast<int>(committees.size()) >= e.m() - e.k() + 1);
        std::set<candidate_set> distinct(committees.begin(), committees.end());
        CHECK(distinct.size() == committees.size());
        for (const auto& w : committees) CHECK(is_jr_committee(e, w));
        ++done;
    }
}

TEST_CASE("both-genders committee on the gender-tension fixture") {
    auto [e, genders] = fixture_example3(8);
    candidate_set w = committee_both_genders(e, genders);
    CHECK(is_jr_committee(e, w));
    CHECK(has_both(w, genders));
    CHECK(imbalance(w, genders) == 6);
}

TEST_CASE("both-genders committee, justifying-prefix case") {
    // one deficient block; prefix of size k-1 justifies and is mixed already
    approval_election e(4, 3, 2, {{0}, {0}, {0, 1}, {2}});
    gender_assignment genders{{gender::male, gender::female, gender::female}};
    candidate_set w = committee_both_genders(e, genders);
    CHECK(w == candidate_set({0, 1}));
    CHECK(is_jr_committee(e, w));
    CHECK(has_both(w, genders));
}

TEST_CASE("both-genders committee preconditions") {
    auto [e, genders] = fixture_example3(8);
    gender_assignment all_male;
    all_male.labels.assign(static_cast<std::size_t>(e.m()), gender::male);
    CHECK_THROWS_AS(committee_both_genders(e, all_male), std::invalid_argument);

    approval_election tiny(1, 2, 1, {{0}});
    gender_assignment mixed{{gender::male, gender::female}};
    CHECK_THROWS_AS(committee_both_genders(tiny, mixed), std::invalid_argument);
}

TEST_CASE("both-genders committee on random instances") {
    split_mix64 rng(601);
    int done = 0;
    for (std::uint64_t t = 0; done < 60; ++t) {
        approval_election e = gen_ic(24, 10, 4, 0.35, derive_seed(601, t));
        gender_assignment genders = random_genders(rng, e.m());
        bool ok = true;
        for (gender want : {gender::male, gender::female}) {
            bool found = false;
            for (int c = 0; c < e.m(); ++c)
                if (genders.of(c) == want && e.supporters(c).any()) found = true;
            if (!found) ok = false;
        }
        if (!ok) continue;
        candidate_set w = committee_both_genders(e, genders);
        CHECK(is_jr_committee(e, w));
        CHECK(has_both(w, genders));
        ++done;
    }
}

TEST_CASE("imbalance heuristic on the gender-tension fixture") {
    auto [e, genders] = fixture_example3(8);
    candidate_set w = min_imbalance_heuristic(e, genders);
    CHECK(is_jr_committee(e, w));
    CHECK(imbalance(w, genders) == 6);
}

TEST_CASE("imbalance heuristic achieves parity with no deficiency") {
    // every candidate has one supporter <= ell = 1: greedy groups are empty
    // and k = 3 leaves the odd-size parity of 1
    approval_election e(6, 4, 3, {{0}, {1}, {2}, {3}, {}, {}});
    gender_assignment genders{
        {gender::male, gender::female, gender::male, gender::female}};
    CHECK(greedy_cc(e, greedy_cc_mode::stop_when_justifying).empty());
    candidate_set w = min_imbalance_heuristic(e, genders);
    CHECK(static_cast<int>(w.size()) == 3);
    CHECK(imbalance(w, genders) == 1);
}

TEST_CASE("imbalance heuristic never loses to the both-genders guarantee") {
    split_mix64 rng(602);
    int done = 0;
    for (std::uint64_t t = 0; done < 40; ++t) {
        approval_election e = gen_ic(24, 12, 4, 0.3, derive_seed(602, t));
        gender_assignment genders = random_genders(rng, e.m());
        bool ok = true;
        for (gender want : {gender::male, gender::female}) {
            bool found = false;
            for (int c = 0; c < e.m(); ++c)
                if (genders.of(c) == want && e.supporters(c).any()) found = true;
            if (!found) ok = false;
        }
        if (!ok) continue;
        int heuristic = imbalance(min_imbalance_heuristic(e, genders), genders);
        int guaranteed = imbalance(committee_both_genders(e, genders), genders);
        CHECK(heuristic <= guaranteed);
        ++done;
    }
}

#ifndef JR_TREE_HPP
#define JR_TREE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "jr/election.hpp"

namespace jr {

// Rooted tree over the m candidates, encoded as a parent array with -1 at
// the root.
struct rooted_candidate_tree {
    std::vector<int> parent;

    int size() const { return static_cast<int>(parent.size()); }
    int root() const;
    // Distance from the root, per candidate.
    std::vector<int> depths() const;
    // Validates: exactly one root, all parent links in range and acyclic.
    void validate() const;

    bool operator==(const rooted_candidate_tree&) const = default;
};

// .tree format: line 1 "m"; then m lines "child parent" with -1 for the root.
rooted_candidate_tree parse_tree(std::string_view text);
std::string serialize_tree(const rooted_candidate_tree& t);

// 1-D voter/candidate range model: every agent has a center and radius; its
// interval is [center - radius, center + radius]. A voter approves a
// candidate iff their intervals intersect (closed; touching counts).
struct interval_model {
    struct agent {
        double center;
        double radius;
        double lo() const { return center - radius; }
        double hi() const { return center + radius; }
    };
    std::vector<agent> voters;
    std::vector<agent> candidates;
};

// .vcr format: line 1 "n m"; then n voter lines and m candidate lines,
// each "x r" as decimals.
interval_model parse_interval_model(std::string_view text);
std::string serialize_interval_model(const interval_model& iv);

// True iff every non-empty ballot induces a connected subgraph of t.
// Throws std::invalid_argument if t covers a different candidate count.
bool validate_tree_representation(const approval_election& e,
                                  const rooted_candidate_tree& t);

// Exact smallest justifying group for an instance with a tree representation:
// repeatedly pick the deepest node v whose subtree fully contains the ballots
// of ceil(n/k) voters sharing a common candidate, add v, and delete the
// subtree along with every voter whose ballot touches it.
// Pre: validate_tree_representation(e, t); throws otherwise.
candidate_set solve_on_tree(const approval_election& e,
                            const rooted_candidate_tree& t);

// Appendix-style construction of a tree representation for an interval model:
// the maximal unnested candidates form a path sorted by interval endpoints;
// every remaining candidate attaches, in non-nested-first order, below a
// strictly containing node, preferring higher levels. Rooted at the
// lowest-index path candidate.
rooted_candidate_tree vcr_to_tree(const interval_model& iv);

// The election induced by an interval model: voter i approves candidate c iff
// lo(c) <= hi(i) and lo(i) <= hi(c).
approval_election vcr_election(const interval_model& iv, int k);

} // namespace jr

#endif

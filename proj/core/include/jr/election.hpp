#ifndef JR_ELECTION_HPP
#define JR_ELECTION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jr/bitset.hpp"

namespace jr {

using candidate_id = int;
using voter_id = int;

// Thrown on malformed election/tree/interval files; `line` is 1-based.
struct parse_error : std::runtime_error {
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line(line) {}
    int line;
};

enum class gender : char { male = 'M', female = 'F' };

// One of two labels per candidate.
struct gender_assignment {
    std::vector<gender> labels;

    gender of(candidate_id c) const { return labels[static_cast<std::size_t>(c)]; }
    std::size_t size() const { return labels.size(); }
    bool operator==(const gender_assignment&) const = default;
};

// A set of candidate indices kept as a strictly increasing list.
class candidate_set {
public:
    candidate_set() = default;
    // Sorts; throws std::invalid_argument on duplicates or negatives.
    explicit candidate_set(std::vector<candidate_id> members);

    static candidate_set full(int m);

    bool contains(candidate_id c) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<candidate_id>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    // Inserts c keeping the order; throws std::invalid_argument if present.
    void insert(candidate_id c);
    candidate_set without(candidate_id c) const;

    bool operator==(const candidate_set&) const = default;
    bool operator<(const candidate_set& other) const { return members_ < other.members_; }

    std::string to_string() const;

private:
    std::vector<candidate_id> members_;
};

// Approval election: n voters, m candidates, committee size k, per-voter
// ballots. Supporter sets B_c and the deficiency threshold
// ell = ceil(n/k) - 1 are derived on construction; ceilings use integer
// arithmetic throughout.
class approval_election {
public:
    approval_election(int n, int m, int k,
                      std::vector<std::vector<candidate_id>> ballots,
                      std::optional<gender_assignment> genders = std::nullopt);

    int n() const { return n_; }
    int m() const { return m_; }
    int k() const { return k_; }
    int ell() const { return ell_; }
    // ceil(n/k), the minimum size of a cohesive group that must be represented.
    int group_threshold() const { return ell_ + 1; }

    const std::vector<candidate_id>& ballot(voter_id i) const {
        return ballots_[static_cast<std::size_t>(i)];
    }
    const std::vector<std::vector<candidate_id>>& ballots() const { return ballots_; }

    // B_c: the voters approving candidate c, as a bitset over voters.
    const dyn_bitset& supporters(candidate_id c) const {
        return supporters_[static_cast<std::size_t>(c)];
    }

    const std::optional<gender_assignment>& genders() const { return genders_; }
    void attach_genders(gender_assignment g);

    bool operator==(const approval_election&) const = default;

private:
    int n_, m_, k_, ell_;
    std::vector<std::vector<candidate_id>> ballots_;
    std::vector<dyn_bitset> supporters_;
    std::optional<gender_assignment> genders_;
};

// Parses the .appr format:
//   line 1: "n m k"
//   optional line 2: "genders " followed by exactly m characters from {M,F}
//   then n ballot lines of strictly increasing 0-based indices (empty line =
//   empty ballot); lines starting with '#' are comments and ignored anywhere.
// Empty ballots produce a warning (appended to *warnings, if given), not an
// error. Malformed input throws parse_error naming the line.
approval_election parse_election(std::string_view text,
                                 std::vector<std::string>* warnings = nullptr);

// Inverse of parse_election: increasing indices, single spaces, trailing
// newline, no comments. parse_election(serialize_election(e)) == e.
std::string serialize_election(const approval_election& e);

// Whitespace-separated candidate indices; '#' starts a comment line.
candidate_set parse_candidate_set(std::string_view text, int m);

} // namespace jr

#endif

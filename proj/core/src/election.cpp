#include "jr/election.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace jr {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

bool is_comment(std::string_view s) {
    std::size_t i = s.find_first_not_of(" \t\r");
    return i != std::string_view::npos && s[i] == '#';
}

std::vector<long long> parse_ints(std::string_view s, int line_no) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
            ++i;
            continue;
        }
        long long v = 0;
        auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
        if (ec != std::errc{})
            throw parse_error(line_no, "expected integer near '" +
                                           std::string(s.substr(i, 8)) + "'");
        out.push_back(v);
        i = static_cast<std::size_t>(ptr - s.data());
    }
    return out;
}

} // namespace

candidate_set::candidate_set(std::vector<candidate_id> members)
    : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 0)
            throw std::invalid_argument("negative candidate index");
        if (i > 0 && members_[i] == members_[i - 1])
            throw std::invalid_argument("duplicate candidate index " +
                                        std::to_string(members_[i]));
    }
}

candidate_set candidate_set::full(int m) {
    std::vector<candidate_id> all(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) all[static_cast<std::size_t>(c)] = c;
    return candidate_set(std::move(all));
}

bool candidate_set::contains(candidate_id c) const {
    return std::binary_search(members_.begin(), members_.end(), c);
}

void candidate_set::insert(candidate_id c) {
    auto it = std::lower_bound(members_.begin(), members_.end(), c);
    if (it != members_.end() && *it == c)
        throw std::invalid_argument("candidate already in set");
    members_.insert(it, c);
}

candidate_set candidate_set::without(candidate_id c) const {
    std::vector<candidate_id> out;
    out.reserve(members_.size());
    for (candidate_id x : members_)
        if (x != c) out.push_back(x);
    return candidate_set(std::move(out));
}

std::string candidate_set::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) os << ' ';
        os << members_[i];
    }
    return os.str();
}

approval_election::approval_election(
    int n, int m, int k, std::vector<std::vector<candidate_id>> ballots,
    std::optional<gender_assignment> genders)
    : n_(n), m_(m), k_(k), ballots_(std::move(ballots)), genders_(std::move(genders)) {
    if (n_ < 1) throw std::invalid_argument("voter count must be positive");
    if (m_ < 1) throw std::invalid_argument("candidate count must be positive");
    if (k_ < 1 || k_ > m_)
        throw std::invalid_argument("committee size k must satisfy 1 <= k <= m");
    if (ballots_.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("ballot count does not match voter count");
    ell_ = (n_ + k_ - 1) / k_ - 1;

    supporters_.assign(static_cast<std::size_t>(m_),
                       dyn_bitset(static_cast<std::size_t>(n_)));
    for (int i = 0; i < n_; ++i) {
        auto& b = ballots_[static_cast<std::size_t>(i)];
        std::sort(b.begin(), b.end());
        for (std::size_t j = 0; j < b.size(); ++j) {
            candidate_id c = b[j];
            if (c < 0 || c >= m_)
                throw std::invalid_argument("ballot index out of range");
            if (j > 0 && c == b[j - 1])
                throw std::invalid_argument("duplicate index in ballot");
            supporters_[static_cast<std::size_t>(c)].set(static_cast<std::size_t>(i));
        }
    }

    if (genders_ && genders_->size() != static_cast<std::size_t>(m_))
        throw std::invalid_argument("gender assignment size does not match m");
}

void approval_election::attach_genders(gender_assignment g) {
    if (g.size() != static_cast<std::size_t>(m_))
        throw std::invalid_argument("gender assignment size does not match m");
    genders_ = std::move(g);
}

approval_election parse_election(std::string_view text,
                                 std::vector<std::string>* warnings) {
    auto lines = split_lines(text);

    int n = 0, m = 0, k = 0;
    std::optional<gender_assignment> genders;
    std::vector<std::vector<candidate_id>> ballots;
    int ballots_read = 0;
    bool header_read = false;

    for (std::size_t li = 0; li < lines.size(); ++li) {
        int line_no = static_cast<int>(li) + 1;
        std::string_view line = lines[li];
        if (is_comment(line)) continue;

        if (!header_read) {
            if (is_blank(line))
                throw parse_error(line_no, "expected header 'n m k'");
            auto vals = parse_ints(line, line_no);
            if (vals.size() != 3)
                throw parse_error(line_no, "header must be three integers 'n m k'");
            if (vals[0] < 1 || vals[1] < 1 || vals[2] < 1)
                throw parse_error(line_no, "n, m, k must be positive");
            if (vals[0] > 1'000'000 || vals[1] > 1'000'000)
                throw parse_error(line_no, "n or m implausibly large");
            n = static_cast<int>(vals[0]);
            m = static_cast<int>(vals[1]);
            k = static_cast<int>(vals[2]);
            if (k > m) throw parse_error(line_no, "k exceeds candidate count m");
            header_read = true;
            continue;
        }

        if (ballots_read == 0 && ballots.empty() && line.starts_with("genders")) {
            std::string_view rest = line.substr(7);
            if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
            while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' '))
                rest.remove_suffix(1);
            if (static_cast<int>(rest.size()) != m)
                throw parse_error(line_no, "genders line must carry exactly m labels");
            gender_assignment g;
            g.labels.reserve(static_cast<std::size_t>(m));
            for (char ch : rest) {
                if (ch != 'M' && ch != 'F')
                    throw parse_error(line_no, "gender labels must be 'M' or 'F'");
                g.labels.push_back(static_cast<gender>(ch));
            }
            genders = std::move(g);
            continue;
        }

        if (ballots_read < n) {
            auto vals = parse_ints(line, line_no);
            std::vector<candidate_id> ballot;
            ballot.reserve(vals.size());
            for (std::size_t j = 0; j < vals.size(); ++j) {
                long long v = vals[j];
                if (v < 0 || v >= m)
                    throw parse_error(line_no, "candidate index " + std::to_string(v) +
                                                   " out of range [0, " +
                                                   std::to_string(m - 1) + "]");
                if (j > 0 && v <= vals[j - 1])
                    throw parse_error(line_no,
                                      "ballot indices must be strictly increasing");
                ballot.push_back(static_cast<candidate_id>(v));
            }
            if (ballot.empty() && warnings)
                warnings->push_back("line " + std::to_string(line_no) +
                                    ": empty ballot for voter " +
                                    std::to_string(ballots_read));
            ballots.push_back(std::move(ballot));
            ++ballots_read;
            continue;
        }

        if (!is_blank(line))
            throw parse_error(line_no, "unexpected content after last ballot");
    }

    if (!header_read) throw parse_error(1, "missing header 'n m k'");
    if (ballots_read < n)
        throw parse_error(static_cast<int>(lines.size()) + 1,
                          "expected " + std::to_string(n) + " ballot lines, got " +
                              std::to_string(ballots_read));

    return approval_election(n, m, k, std::move(ballots), std::move(genders));
}

std::string serialize_election(const approval_election& e) {
    std::ostringstream os;
    os << e.n() << ' ' << e.m() << ' ' << e.k() << '\n';
    if (e.genders()) {
        os << "genders ";
        for (gender g : e.genders()->labels) os << static_cast<char>(g);
        os << '\n';
    }
    for (int i = 0; i < e.n(); ++i) {
        const auto& b = e.ballot(i);
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (j) os << ' ';
            os << b[j];
        }
        os << '\n';
    }
    return os.str();
}

candidate_set parse_candidate_set(std::string_view text, int m) {
    auto lines = split_lines(text);
    std::vector<candidate_id> members;
    for (std::size_t li = 0; li < lines.size(); ++li) {
        if (is_comment(lines[li])) continue;
        for (long long v : parse_ints(lines[li], static_cast<int>(li) + 1)) {
            if (v < 0 || v >= m)
                throw parse_error(static_cast<int>(li) + 1,
                                  "candidate index " + std::to_string(v) +
                                      " out of range");
            members.push_back(static_cast<candidate_id>(v));
        }
    }
    return candidate_set(std::move(members));
}

} // namespace jr

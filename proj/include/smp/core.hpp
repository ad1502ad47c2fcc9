#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace smp {

enum class Gender { men, women };

inline Gender opposite(Gender g) { return g == Gender::men ? Gender::women : Gender::men; }

/// Thrown when an operation would exceed a configured brute-force bound.
struct BoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown on malformed input files. `line` is 1-based, 0 when unknown.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& what)
        : std::runtime_error(line_number > 0 ? "line " + std::to_string(line_number) + ": " + what
                                             : what),
          line(line_number) {}
};

/// A perfect matching between n men and n women. Internally a man -> woman
/// map plus its inverse; indices are 0-based throughout the library.
class Matching {
public:
    explicit Matching(std::vector<int> wife_of_man);

    int size() const { return static_cast<int>(wife_.size()); }
    int wife_of(int man) const { return wife_.at(man); }
    int husband_of(int woman) const { return husband_.at(woman); }
    const std::vector<int>& wives() const { return wife_; }

    /// The same pair set with the roles exchanged (used to compare results
    /// across a gender swap).
    Matching transposed() const { return Matching(husband_); }

    bool operator==(const Matching& other) const { return wife_ == other.wife_; }
    auto operator<=>(const Matching& other) const { return wife_ <=> other.wife_; }

private:
    std::vector<int> wife_;
    std::vector<int> husband_;
};

/// A stable-marriage instance: n strict total orders per gender over the
/// opposite gender, most preferred first. Immutable after construction;
/// rank tables are precomputed so rank lookups are O(1).
class Profile {
public:
    Profile(std::vector<std::vector<int>> men_prefs, std::vector<std::vector<int>> women_prefs);

    int size() const { return static_cast<int>(men_prefs_.size()); }
    const std::vector<std::vector<int>>& men_prefs() const { return men_prefs_; }
    const std::vector<std::vector<int>>& women_prefs() const { return women_prefs_; }
    const std::vector<std::vector<int>>& prefs(Gender g) const {
        return g == Gender::men ? men_prefs_ : women_prefs_;
    }
    const std::vector<int>& list_of(Gender g, int who) const { return prefs(g).at(who); }

    /// 0-based position of woman w in man m's list (0 = most preferred).
    int man_rank(int m, int w) const { return man_rank_[m][w]; }
    /// 0-based position of man m in woman w's list.
    int woman_rank(int w, int m) const { return woman_rank_[w][m]; }
    int rank(Gender g, int who, int partner) const {
        return g == Gender::men ? man_rank(who, partner) : woman_rank(who, partner);
    }

    /// Copy of this profile with one person's list replaced.
    Profile with_list(Gender g, int who, std::vector<int> list) const;

    bool operator==(const Profile& other) const {
        return men_prefs_ == other.men_prefs_ && women_prefs_ == other.women_prefs_;
    }

private:
    std::vector<std::vector<int>> men_prefs_;
    std::vector<std::vector<int>> women_prefs_;
    std::vector<std::vector<int>> man_rank_;
    std::vector<std::vector<int>> woman_rank_;
};

/// Exchange the two sides: the returned profile's "men" hold the old
/// women's lists. Involution.
Profile swap_genders(const Profile& p);

struct BlockingPair {
    int man;
    int woman;
    bool operator==(const BlockingPair&) const = default;
};

/// All pairs (m, w) who each strictly prefer the other to their assigned
/// partner under mu.
std::vector<BlockingPair> blocking_pairs(const Profile& p, const Matching& mu);

bool is_stable(const Profile& p, const Matching& mu);

/// Brute-force enumeration of every stable matching, in increasing
/// lexicographic order of the man -> woman map. Throws BoundExceeded when
/// n exceeds the bound (n! bijections are scanned).
std::vector<Matching> all_stable_matchings(const Profile& p, int bound = 8);

}  // namespace smp

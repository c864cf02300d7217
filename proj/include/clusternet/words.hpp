#pragma once

#include <string>
#include <vector>

#include "clusternet/rational.hpp"

namespace clusternet {

// Ordered alphabet of distinct letter names. Words and patterns store indices
// into one alphabet.
class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> letters);

    int size() const { return static_cast<int>(letters_.size()); }
    const std::string& letter(int index) const { return letters_.at(static_cast<size_t>(index)); }
    const std::vector<std::string>& letters() const { return letters_; }
    // -1 when the name is unknown.
    int index_of(const std::string& name) const;

private:
    std::vector<std::string> letters_;
};

using Word = std::vector<int>;

Word word_from_string(const Alphabet& alphabet, const std::string& text);
std::string word_to_string(const Alphabet& alphabet, const Word& word);

// Forbidden pattern with its marking variable (0-based).
struct Pattern {
    Word word;
    int var = 0;
};

// A set of forbidden patterns sharing a fixed marking-variable arity. Patterns
// must have length >= 2 and be pairwise distinct as words; one pattern may be
// a subword of another (non-reduced sets are supported).
class PatternSet {
public:
    PatternSet(std::vector<Pattern> patterns, int arity);

    int arity() const { return arity_; }
    int size() const { return static_cast<int>(patterns_.size()); }
    const Pattern& pattern(int u) const { return patterns_.at(static_cast<size_t>(u)); }
    const std::vector<Pattern>& patterns() const { return patterns_; }
    int max_letter() const;

private:
    std::vector<Pattern> patterns_;
    int arity_;
};

// A single mark: pattern `pattern` occurs starting at 1-based position `pos`.
struct Mark {
    int pos = 0;
    int pattern = 0;

    auto operator<=>(const Mark&) const = default;
};

// Word together with a set of marked pattern occurrences, kept sorted by
// (start, end). Construct through make_marked_word, which validates that each
// mark is a genuine occurrence and that marks are pairwise distinct.
struct MarkedWord {
    Word word;
    std::vector<Mark> marks;

    bool operator==(const MarkedWord&) const = default;
};

MarkedWord make_marked_word(Word word, std::vector<Mark> marks, const PatternSet& patterns);

// All 1-based positions at which `pattern` occurs in `word` as a subword.
std::vector<int> find_occurrences(const Word& word, const Word& pattern);

// True when the marked word cannot be split into two nonempty marked words:
// marks are nonempty, jointly cover every position, and some mark spans each
// internal cut.
bool is_cluster(const MarkedWord& mw, const PatternSet& patterns);

struct Cluster {
    Word word;
    std::vector<Mark> marks;

    bool operator==(const Cluster&) const = default;
    auto operator<=>(const Cluster&) const = default;
};

// Every cluster formed by the pattern set whose word length is at most
// max_len, each mark list sorted by (start, end). Deterministic order.
std::vector<Cluster> enumerate_clusters(const PatternSet& patterns, int max_len);

}  // namespace clusternet

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "clusternet/free_monoid.hpp"
#include "clusternet/series_matrix.hpp"
#include "clusternet/words.hpp"

namespace clusternet {

struct Arc {
    int from = 0;
    int to = 0;

    auto operator<=>(const Arc&) const = default;
};

// Digraph whose arcs carry letter sets, optionally with a rational weight per
// (letter, arc). The interesting instances have the unique-decoding property:
// a word plus fixed endpoints determines at most one walk. That property is
// not enforced at construction; validate_network checks it exhaustively up to
// a given length.
class MonoidNetwork {
public:
    MonoidNetwork(int vertex_count, Alphabet alphabet);

    void add_arc(int from, int to, std::vector<int> letters);
    void set_weight(int letter, int from, int to, Rational weight);

    int vertex_count() const { return vertex_count_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Arc, std::vector<int>>& arcs() const { return arcs_; }
    bool has_weights() const { return !weights_.empty(); }
    // 1 when the network carries no weights; ConfigError when weights exist
    // but this letter/arc pair has none.
    Rational weight(int letter, int from, int to) const;
    // Every (letter, arc) pair must carry a weight once any weight is set.
    void check_weights_complete() const;
    // True when for each vertex the outgoing weights sum to 1.
    bool is_row_stochastic() const;

private:
    int vertex_count_;
    Alphabet alphabet_;
    std::map<Arc, std::vector<int>> arcs_;
    std::map<std::tuple<int, int, int>, Rational> weights_;  // (letter, from, to)
};

// One step of a walk: the letter consumed and the arc traversed.
struct WalkStep {
    int letter = 0;
    Arc arc;

    auto operator<=>(const WalkStep&) const = default;
};

// A realization of a word as a walk: the vertex sequence visited (length
// word-length + 1) and the product of the traversed arc weights.
struct WalkTrace {
    std::vector<int> vertices;
    Rational weight = 1;
};

// All walks from `start` whose letter projection is `word`.
std::vector<WalkTrace> realize_walks(const MonoidNetwork& net, const Word& word, int start);

struct ValidationResult {
    bool ok = true;
    int checked_len = 0;
    // Two distinct walks with the same word and endpoints, when found.
    std::optional<std::pair<std::vector<WalkStep>, std::vector<WalkStep>>> collision;
};

// Exhaustively checks the unique-decoding property for walks of length up to
// check_len. Throws BudgetError (reporting the depth reached) if the walk
// count exceeds the budget.
ValidationResult validate_network(const MonoidNetwork& net, int check_len,
                                  long long budget = 2'000'000);

// Sum of the one-step matrices: entry (i,j) collects the images of the
// letters on arc (i,j), times their weights when the network is weighted.
SeriesMatrix step_matrix(const MonoidNetwork& net, const LetterImages& images);

// Generating-function matrix for all words realized by walks, by length:
// (I - step_matrix)^{-1}.
SeriesMatrix walk_gf_matrix(const MonoidNetwork& net, const LetterImages& images);

// Controls which pattern occurrences may be marked, per (pattern, vertex at
// which the occurrence starts). Occurrences that may not be marked never
// appear in a cluster, so restricted counting (heights, rows) reduces to
// masking marks.
class MarkMask {
public:
    // Everything markable.
    MarkMask();
    // Occurrences starting at the listed vertices go unmarked, for every
    // pattern. Matches deleting those rows of the cluster matrix when all
    // clusters carry a single mark.
    static MarkMask zero_rows(std::set<int> rows);
    // Arbitrary predicate (pattern index, start vertex) -> markable.
    static MarkMask by_predicate(std::function<bool(int, int)> markable);

    bool markable(int pattern, int vertex) const;

private:
    std::function<bool(int, int)> markable_;
};

// Cluster matrix over the network: entry (i,j) sums, over clusters and walks
// from i realizing the cluster word and ending at j, the word image times the
// walk weight times one marking variable per mark. Walks where some mark
// starts at a vertex the mask excludes contribute nothing.
SeriesMatrix network_cluster_matrix(const MonoidNetwork& net, const PatternSet& patterns,
                                    const LetterImages& images, int N,
                                    const MarkMask& mask = MarkMask());

// Generating-function matrix for walk words weighted by length and pattern
// occurrences: (I - steps - cluster matrix at t-1)^{-1}. Entry (i,j) covers
// words realized by walks from i to j.
SeriesMatrix network_occurrence_gf(const MonoidNetwork& net, const PatternSet& patterns,
                                   const LetterImages& images, int N,
                                   const MarkMask& mask = MarkMask());

// For a weighted network with row-stochastic weights: the probability that a
// random length-n walk from i ends at j with a word avoiding every pattern.
// Exact rational: the coefficient of x^n at t = 0 in entry (i,j).
Rational avoidance_probability(const MonoidNetwork& net, const PatternSet& patterns, int n, int i,
                               int j);

}  // namespace clusternet

#pragma once

#include <optional>
#include <set>

#include "clusternet/network.hpp"

namespace clusternet {

enum class PathKind { Dyck, Motzkin, Schroeder };

enum class Step : std::uint8_t { Up, Flat, Down };

// Height bound m, or unbounded. Unbounded generating-function computations
// substitute m = ceil(N/2): a length-n path never exceeds height n/2, so
// coefficients up to x^N are already stable at that bound.
struct PathModel {
    PathKind kind = PathKind::Motzkin;
    std::optional<int> bound;
    // Adds an extra start vertex whose only arc is an up step into height 1;
    // walks from it are exactly the paths that begin with an ascent.
    bool ascent_start_vertex = false;
};

// Alphabet {U, D} for Dyck models, {U, D, F} otherwise.
Alphabet path_alphabet(PathKind kind);

// Height-graph network of the model: vertices 0..m are heights, up arcs
// i -> i+1, down arcs i+1 -> i, flat loops everywhere except Dyck. The
// ascent-start variant appends the extra vertex as index m+1. The bound must
// be present.
MonoidNetwork build_network(const PathModel& model);

// Letter images for the model: every step maps to x, except the Schroeder
// flat step which maps to x^2.
LetterImages path_images(PathKind kind, int order, int arity);

// All paths of the given (weighted) length, never below 0, ending at 0, and
// never above the bound when one is given. Schroeder flat steps count 2
// toward the length.
std::vector<std::vector<Step>> enumerate_paths(int length, std::optional<int> bound, PathKind kind,
                                               int budget = 15);

// Everything the statistics need, tallied in one pass. Heights are taken at
// the first letter of each occurrence.
struct PathStatistics {
    int ascents = 0;
    std::vector<int> ascent_start_heights;  // height before the first up step of each run
    std::vector<int> ascent_end_heights;    // height after the last up step of each run
    int peaks = 0;
    std::vector<int> peak_heights;
    int valleys = 0;
    std::vector<int> valley_heights;
    std::map<int, int> plateaus_by_k;  // occurrences of up, k flats, down
    int plateaus_total = 0;
};

PathStatistics analyze_path(const std::vector<Step>& path);

enum class StatKind { Ascent, PlateauK, PlateauAll, Peak, Valley, PeakAndValley };

struct StatisticSpec {
    StatKind kind = StatKind::Ascent;
    int k = 0;  // used by PlateauK

    int arity() const { return kind == StatKind::PeakAndValley ? 2 : 1; }
};

// Joint statistic value of one path under the spec (one entry, except two for
// PeakAndValley: peaks then valleys).
std::vector<int> count_stat(const PathStatistics& stats, const StatisticSpec& spec);

// Finite description of a set of heights.
class HeightSet {
public:
    enum class Kind { Empty, All, EvenPositive, OddPositive, EvenNonnegative, Explicit };

    HeightSet(Kind kind = Kind::All) : kind_(kind) {}
    static HeightSet explicit_set(std::set<int> values);

    bool contains(int height) const;
    Kind kind() const { return kind_; }

private:
    Kind kind_;
    std::set<int> values_;
};

// Generating function for Motzkin paths by length and the statistic's
// occurrence counts: the (0,0) entry of the occurrence gf over the height
// network, with the pattern set induced by the statistic.
XSeries motzkin_statistic_gf(const StatisticSpec& spec, std::optional<int> bound, int N);

// Motzkin paths whose every ascent ends at a height in A (subset of the
// positive integers). Marks are confined to occurrences at forbidden heights
// and the marking variable is set to 0. Result has arity 0.
XSeries ascent_end_restricted_gf(const HeightSet& A, int N, std::optional<int> bound = {});

// Motzkin paths whose every peak starts at a height in P and every valley at
// a height in V.
XSeries peak_valley_restricted_gf(const HeightSet& P, const HeightSet& V, int N,
                                  std::optional<int> bound = {});

// Motzkin paths whose every maximal run of up steps begins at a height in A.
// Combines the standard network over {DU, FU} with the ascent-start variant:
// paths beginning with an up step need the extra vertex because no letter
// precedes their first run.
XSeries ascent_start_restricted_gf(const HeightSet& A, int N, std::optional<int> bound = {});

// The pattern set a statistic induces over the path alphabet.
PatternSet statistic_patterns(const StatisticSpec& spec, int N);

int resolved_bound(std::optional<int> bound, int N);

}  // namespace clusternet

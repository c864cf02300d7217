#include "clusternet/paths.hpp"

#include <algorithm>

#include "clusternet/errors.hpp"

namespace clusternet {

Alphabet path_alphabet(PathKind kind) {
    if (kind == PathKind::Dyck) return Alphabet({"U", "D"});
    return Alphabet({"U", "D", "F"});
}

MonoidNetwork build_network(const PathModel& model) {
    if (!model.bound.has_value()) {
        throw ConfigError("build_network requires a concrete height bound");
    }
    const int m = *model.bound;
    if (m < 1) throw ConfigError("height bound must be at least 1");
    if (model.ascent_start_vertex && model.kind == PathKind::Dyck) {
        throw ConfigError("the ascent-start vertex is only defined for flat-capable models");
    }
    const Alphabet alphabet = path_alphabet(model.kind);
    const int up = alphabet.index_of("U");
    const int down = alphabet.index_of("D");
    const int flat = alphabet.index_of("F");
    const int vertex_count = m + 1 + (model.ascent_start_vertex ? 1 : 0);
    MonoidNetwork net(vertex_count, alphabet);
    for (int h = 0; h < m; ++h) {
        net.add_arc(h, h + 1, {up});
        net.add_arc(h + 1, h, {down});
    }
    if (flat >= 0) {
        for (int h = 0; h <= m; ++h) net.add_arc(h, h, {flat});
    }
    if (model.ascent_start_vertex) net.add_arc(m + 1, 1, {up});
    return net;
}

LetterImages path_images(PathKind kind, int order, int arity) {
    const Alphabet alphabet = path_alphabet(kind);
    LetterImages images = LetterImages::uniform_x(alphabet.size(), order, arity);
    if (kind == PathKind::Schroeder) {
        images.set_image(alphabet.index_of("F"), XSeries::x_power(order, arity, 2));
    }
    return images;
}

std::vector<std::vector<Step>> enumerate_paths(int length, std::optional<int> bound, PathKind kind,
                                               int budget) {
    if (length < 0) throw RangeError("enumerate_paths: negative length");
    if (length > budget) {
        throw BudgetError("enumerate_paths: length " + std::to_string(length) +
                          " exceeds the oracle budget " + std::to_string(budget));
    }
    const bool has_flat = kind != PathKind::Dyck;
    const int flat_len = kind == PathKind::Schroeder ? 2 : 1;
    std::vector<std::vector<Step>> out;
    std::vector<Step> path;
    auto visit = [&](auto&& self, int remaining, int height) -> void {
        if (remaining == 0) {
            if (height == 0) out.push_back(path);
            return;
        }
        if (height + 1 <= bound.value_or(remaining) && height + 1 <= remaining) {
            path.push_back(Step::Up);
            self(self, remaining - 1, height + 1);
            path.pop_back();
        }
        if (has_flat && remaining >= flat_len) {
            path.push_back(Step::Flat);
            self(self, remaining - flat_len, height);
            path.pop_back();
        }
        if (height > 0) {
            path.push_back(Step::Down);
            self(self, remaining - 1, height - 1);
            path.pop_back();
        }
    };
    visit(visit, length, 0);
    return out;
}

PathStatistics analyze_path(const std::vector<Step>& path) {
    PathStatistics stats;
    int height = 0;
    for (size_t i = 0; i < path.size(); ++i) {
        if (path[i] == Step::Up) {
            if (i == 0 || path[i - 1] != Step::Up) {
                ++stats.ascents;
                stats.ascent_start_heights.push_back(height);
            }
            if (i + 1 == path.size() || path[i + 1] != Step::Up) {
                stats.ascent_end_heights.push_back(height + 1);
            }
        }
        if (path[i] == Step::Up && i + 1 < path.size() && path[i + 1] == Step::Down) {
            ++stats.peaks;
            stats.peak_heights.push_back(height);
        }
        if (path[i] == Step::Down && i + 1 < path.size() && path[i + 1] == Step::Up) {
            ++stats.valleys;
            stats.valley_heights.push_back(height);
        }
        if (path[i] == Step::Up) {
            size_t j = i + 1;
            while (j < path.size() && path[j] == Step::Flat) ++j;
            if (j < path.size() && path[j] == Step::Down) {
                const int k = static_cast<int>(j - i - 1);
                stats.plateaus_by_k[k] += 1;
                ++stats.plateaus_total;
            }
        }
        height += path[i] == Step::Up ? 1 : (path[i] == Step::Down ? -1 : 0);
    }
    return stats;
}

std::vector<int> count_stat(const PathStatistics& stats, const StatisticSpec& spec) {
    switch (spec.kind) {
        case StatKind::Ascent:
            return {stats.ascents};
        case StatKind::PlateauK: {
            auto it = stats.plateaus_by_k.find(spec.k);
            return {it == stats.plateaus_by_k.end() ? 0 : it->second};
        }
        case StatKind::PlateauAll:
            return {stats.plateaus_total};
        case StatKind::Peak:
            return {stats.peaks};
        case StatKind::Valley:
            return {stats.valleys};
        case StatKind::PeakAndValley:
            return {stats.peaks, stats.valleys};
    }
    throw ConfigError("unknown statistic");
}

HeightSet HeightSet::explicit_set(std::set<int> values) {
    HeightSet set(Kind::Explicit);
    set.values_ = std::move(values);
    return set;
}

bool HeightSet::contains(int height) const {
    switch (kind_) {
        case Kind::Empty:
            return false;
        case Kind::All:
            return true;
        case Kind::EvenPositive:
            return height > 0 && height % 2 == 0;
        case Kind::OddPositive:
            return height > 0 && height % 2 == 1;
        case Kind::EvenNonnegative:
            return height >= 0 && height % 2 == 0;
        case Kind::Explicit:
            return values_.contains(height);
    }
    return false;
}

namespace {

Word path_word(const Alphabet& alphabet, const std::string& text) {
    return word_from_string(alphabet, text);
}

}  // namespace

PatternSet statistic_patterns(const StatisticSpec& spec, int N) {
    const Alphabet alphabet = path_alphabet(PathKind::Motzkin);
    switch (spec.kind) {
        case StatKind::Ascent:
            return PatternSet({Pattern{path_word(alphabet, "UD"), 0},
                               Pattern{path_word(alphabet, "UF"), 0}},
                              1);
        case StatKind::PlateauK: {
            std::string w = "U" + std::string(static_cast<size_t>(spec.k), 'F') + "D";
            return PatternSet({Pattern{path_word(alphabet, w), 0}}, 1);
        }
        case StatKind::PlateauAll: {
            // Plateaus longer than N - 2 cannot fit below the truncation order.
            std::vector<Pattern> ps;
            for (int k = 0; k <= std::max(0, N - 2); ++k) {
                std::string w = "U" + std::string(static_cast<size_t>(k), 'F') + "D";
                ps.push_back(Pattern{path_word(alphabet, w), 0});
            }
            return PatternSet(std::move(ps), 1);
        }
        case StatKind::Peak:
            return PatternSet({Pattern{path_word(alphabet, "UD"), 0}}, 1);
        case StatKind::Valley:
            return PatternSet({Pattern{path_word(alphabet, "DU"), 0}}, 1);
        case StatKind::PeakAndValley:
            return PatternSet({Pattern{path_word(alphabet, "UD"), 0},
                               Pattern{path_word(alphabet, "DU"), 1}},
                              2);
    }
    throw ConfigError("unknown statistic");
}

int resolved_bound(std::optional<int> bound, int N) {
    if (bound.has_value()) {
        if (*bound < 1) throw ConfigError("height bound must be at least 1");
        return *bound;
    }
    return std::max(1, (N + 1) / 2);
}

XSeries motzkin_statistic_gf(const StatisticSpec& spec, std::optional<int> bound, int N) {
    const int m = resolved_bound(bound, N);
    MonoidNetwork net = build_network(PathModel{PathKind::Motzkin, m, false});
    LetterImages images = path_images(PathKind::Motzkin, N, spec.arity());
    PatternSet patterns = statistic_patterns(spec, N);
    return network_occurrence_gf(net, patterns, images, N).at(0, 0);
}

namespace {

XSeries restricted_entry(const MonoidNetwork& net, const PatternSet& patterns, int N,
                         const MarkMask& mask, int from, int to) {
    LetterImages images = path_images(PathKind::Motzkin, N, 1);
    SeriesMatrix f = network_occurrence_gf(net, patterns, images, N, mask);
    std::vector<Rational> zero{Rational(0)};
    return f.at(from, to).eval_t(zero);
}

}  // namespace

XSeries ascent_end_restricted_gf(const HeightSet& A, int N, std::optional<int> bound) {
    const int m = resolved_bound(bound, N);
    MonoidNetwork net = build_network(PathModel{PathKind::Motzkin, m, false});
    PatternSet patterns = statistic_patterns(StatisticSpec{StatKind::Ascent, 0}, N);
    // An occurrence of UD or UF starting at height h belongs to an ascent
    // ending at height h+1; occurrences whose ascent ends inside A go
    // unmarked so that t = 0 keeps them.
    MarkMask mask = MarkMask::by_predicate([A](int, int vertex) { return !A.contains(vertex + 1); });
    return restricted_entry(net, patterns, N, mask, 0, 0);
}

XSeries peak_valley_restricted_gf(const HeightSet& P, const HeightSet& V, int N,
                                  std::optional<int> bound) {
    const int m = resolved_bound(bound, N);
    MonoidNetwork net = build_network(PathModel{PathKind::Motzkin, m, false});
    const Alphabet alphabet = path_alphabet(PathKind::Motzkin);
    PatternSet patterns({Pattern{path_word(alphabet, "UD"), 0},
                         Pattern{path_word(alphabet, "DU"), 0}},
                        1);
    MarkMask mask = MarkMask::by_predicate([P, V](int pattern, int vertex) {
        return pattern == 0 ? !P.contains(vertex) : !V.contains(vertex);
    });
    return restricted_entry(net, patterns, N, mask, 0, 0);
}

XSeries ascent_start_restricted_gf(const HeightSet& A, int N, std::optional<int> bound) {
    const int m = resolved_bound(bound, N);
    const Alphabet alphabet = path_alphabet(PathKind::Motzkin);
    PatternSet patterns({Pattern{path_word(alphabet, "DU"), 0},
                         Pattern{path_word(alphabet, "FU"), 0}},
                        1);
    // DU starting at height h begins an ascent at h-1; FU starting at h
    // begins one at h.
    MarkMask mask = MarkMask::by_predicate([A](int pattern, int vertex) {
        return pattern == 0 ? !A.contains(vertex - 1) : !A.contains(vertex);
    });
    MonoidNetwork standard = build_network(PathModel{PathKind::Motzkin, m, false});
    XSeries f_all = restricted_entry(standard, patterns, N, mask, 0, 0);
    MonoidNetwork variant = build_network(PathModel{PathKind::Motzkin, m, true});
    XSeries f_up_start = restricted_entry(variant, patterns, N, mask, m + 1, 0);
    // Paths not beginning with an up step have every run preceded by a letter;
    // paths beginning with one are admissible only when 0 lies in A.
    XSeries out = f_all - f_up_start;
    if (A.contains(0)) out += f_up_start;
    return out;
}

}  // namespace clusternet

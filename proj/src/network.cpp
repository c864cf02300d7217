#include "clusternet/network.hpp"

#include <algorithm>

#include "clusternet/errors.hpp"

namespace clusternet {

MonoidNetwork::MonoidNetwork(int vertex_count, Alphabet alphabet)
    : vertex_count_(vertex_count), alphabet_(std::move(alphabet)) {
    if (vertex_count <= 0) throw ConfigError("MonoidNetwork needs at least one vertex");
}

void MonoidNetwork::add_arc(int from, int to, std::vector<int> letters) {
    if (from < 0 || from >= vertex_count_ || to < 0 || to >= vertex_count_) {
        throw ConfigError("arc endpoint out of range");
    }
    if (letters.empty()) throw ConfigError("arc letter set must be non-empty");
    std::set<int> seen;
    for (int letter : letters) {
        if (letter < 0 || letter >= alphabet_.size()) throw ConfigError("arc letter out of range");
        if (!seen.insert(letter).second) throw ConfigError("arc letter repeated");
    }
    auto [it, inserted] = arcs_.emplace(Arc{from, to}, std::move(letters));
    if (!inserted) throw ConfigError("arc declared twice");
}

void MonoidNetwork::set_weight(int letter, int from, int to, Rational weight) {
    auto it = arcs_.find(Arc{from, to});
    if (it == arcs_.end() || std::find(it->second.begin(), it->second.end(), letter) == it->second.end()) {
        throw ConfigError("weight assigned to a letter/arc pair not in the network");
    }
    weights_[{letter, from, to}] = std::move(weight);
}

Rational MonoidNetwork::weight(int letter, int from, int to) const {
    if (weights_.empty()) return 1;
    auto it = weights_.find({letter, from, to});
    if (it == weights_.end()) {
        throw ConfigError("missing weight for letter " + alphabet_.letter(letter) + " on arc (" +
                          std::to_string(from) + "," + std::to_string(to) + ")");
    }
    return it->second;
}

void MonoidNetwork::check_weights_complete() const {
    if (weights_.empty()) return;
    for (const auto& [arc, letters] : arcs_) {
        for (int letter : letters) {
            if (!weights_.contains({letter, arc.from, arc.to})) {
                throw ConfigError("missing weight for letter " + alphabet_.letter(letter) +
                                  " on arc (" + std::to_string(arc.from) + "," +
                                  std::to_string(arc.to) + ")");
            }
        }
    }
}

bool MonoidNetwork::is_row_stochastic() const {
    check_weights_complete();
    std::vector<Rational> row_sum(static_cast<size_t>(vertex_count_), Rational(0));
    for (const auto& [arc, letters] : arcs_) {
        for (int letter : letters) {
            row_sum[static_cast<size_t>(arc.from)] += weight(letter, arc.from, arc.to);
        }
    }
    return std::all_of(row_sum.begin(), row_sum.end(), [](const Rational& s) { return s == 1; });
}

std::vector<WalkTrace> realize_walks(const MonoidNetwork& net, const Word& word, int start) {
    std::vector<WalkTrace> frontier{WalkTrace{{start}, 1}};
    for (int letter : word) {
        std::vector<WalkTrace> next;
        for (const auto& trace : frontier) {
            const int here = trace.vertices.back();
            for (const auto& [arc, letters] : net.arcs()) {
                if (arc.from != here) continue;
                if (std::find(letters.begin(), letters.end(), letter) == letters.end()) continue;
                WalkTrace extended = trace;
                extended.vertices.push_back(arc.to);
                extended.weight *= net.weight(letter, arc.from, arc.to);
                next.push_back(std::move(extended));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) return {};
    }
    return frontier;
}

ValidationResult validate_network(const MonoidNetwork& net, int check_len, long long budget) {
    if (check_len < 1) throw ConfigError("validate_network: check_len must be at least 1");
    struct Partial {
        Word word;
        std::vector<WalkStep> steps;
        int start;
        int end;
    };
    std::vector<Partial> frontier;
    for (int v = 0; v < net.vertex_count(); ++v) frontier.push_back(Partial{{}, {}, v, v});
    long long seen = 0;
    for (int len = 1; len <= check_len; ++len) {
        std::vector<Partial> next;
        for (const auto& partial : frontier) {
            for (const auto& [arc, letters] : net.arcs()) {
                if (arc.from != partial.end) continue;
                for (int letter : letters) {
                    Partial extended = partial;
                    extended.word.push_back(letter);
                    extended.steps.push_back(WalkStep{letter, arc});
                    extended.end = arc.to;
                    next.push_back(std::move(extended));
                    if (++seen > budget) {
                        throw BudgetError("validate_network: walk budget exceeded at length " +
                                          std::to_string(len));
                    }
                }
            }
        }
        std::map<std::tuple<int, Word, int>, const Partial*> by_signature;
        for (const auto& partial : next) {
            auto key = std::make_tuple(partial.start, partial.word, partial.end);
            auto [it, inserted] = by_signature.emplace(key, &partial);
            if (!inserted) {
                return ValidationResult{false, len,
                                        std::make_pair(it->second->steps, partial.steps)};
            }
        }
        frontier = std::move(next);
    }
    return ValidationResult{true, check_len, std::nullopt};
}

namespace {

void check_images(const MonoidNetwork& net, const LetterImages& images) {
    if (images.letter_count() != net.alphabet().size()) {
        throw ConfigError("letter image count does not match the alphabet");
    }
    for (int a = 0; a < images.letter_count(); ++a) {
        if (images.image(a).x_order() < 1) {
            throw AdmissibilityError("letter image has a nonzero constant term");
        }
    }
}

}  // namespace

SeriesMatrix step_matrix(const MonoidNetwork& net, const LetterImages& images) {
    check_images(net, images);
    net.check_weights_complete();
    SeriesMatrix m(net.vertex_count(), images.order(), images.arity());
    for (const auto& [arc, letters] : net.arcs()) {
        for (int letter : letters) {
            m.at(arc.from, arc.to) += images.image(letter).scaled(net.weight(letter, arc.from, arc.to));
        }
    }
    return m;
}

SeriesMatrix walk_gf_matrix(const MonoidNetwork& net, const LetterImages& images) {
    return invert_id_minus(step_matrix(net, images));
}

MarkMask::MarkMask() : markable_([](int, int) { return true; }) {}

MarkMask MarkMask::zero_rows(std::set<int> rows) {
    MarkMask mask;
    mask.markable_ = [rows = std::move(rows)](int, int vertex) { return !rows.contains(vertex); };
    return mask;
}

MarkMask MarkMask::by_predicate(std::function<bool(int, int)> markable) {
    MarkMask mask;
    mask.markable_ = std::move(markable);
    return mask;
}

bool MarkMask::markable(int pattern, int vertex) const { return markable_(pattern, vertex); }

SeriesMatrix network_cluster_matrix(const MonoidNetwork& net, const PatternSet& patterns,
                                    const LetterImages& images, int N, const MarkMask& mask) {
    check_images(net, images);
    net.check_weights_complete();
    if (patterns.arity() != images.arity()) throw ArityError("network_cluster_matrix: arity mismatch");
    if (patterns.max_letter() >= net.alphabet().size()) {
        throw ConfigError("pattern uses a letter outside the network alphabet");
    }
    SeriesMatrix total(net.vertex_count(), N, patterns.arity());
    if (N < 2) return total;

    std::vector<int> exps(static_cast<size_t>(patterns.arity()));
    for (const auto& cluster : enumerate_clusters(patterns, N)) {
        XSeries img = word_image(images, cluster.word).truncated(N);
        if (img.is_zero()) continue;
        std::fill(exps.begin(), exps.end(), 0);
        for (const auto& mark : cluster.marks) {
            exps[static_cast<size_t>(patterns.pattern(mark.pattern).var)] += 1;
        }
        const TPoly monomial = TPoly::monomial(patterns.arity(), exps, 1);
        for (int start = 0; start < net.vertex_count(); ++start) {
            for (const auto& trace : realize_walks(net, cluster.word, start)) {
                const bool all_marks_allowed =
                    std::all_of(cluster.marks.begin(), cluster.marks.end(), [&](const Mark& mark) {
                        return mask.markable(mark.pattern,
                                             trace.vertices[static_cast<size_t>(mark.pos - 1)]);
                    });
                if (!all_marks_allowed) continue;
                total.at(start, trace.vertices.back()) +=
                    img.scaled(monomial.scaled(trace.weight));
            }
        }
    }
    return total;
}

SeriesMatrix network_occurrence_gf(const MonoidNetwork& net, const PatternSet& patterns,
                                   const LetterImages& images, int N, const MarkMask& mask) {
    std::vector<Rational> minus_one(static_cast<size_t>(patterns.arity()), Rational(-1));
    SeriesMatrix steps = step_matrix(net, images);
    if (steps.order() != N) {
        throw ArityError("network_occurrence_gf: images must carry truncation order N");
    }
    SeriesMatrix clusters = network_cluster_matrix(net, patterns, images, N, mask).shifted_t(minus_one);
    return invert_id_minus(steps + clusters);
}

Rational avoidance_probability(const MonoidNetwork& net, const PatternSet& patterns, int n, int i,
                               int j) {
    if (!net.has_weights() || !net.is_row_stochastic()) {
        throw ConfigError("avoidance_probability requires row-stochastic weights");
    }
    if (n < 0) throw RangeError("avoidance_probability: negative length");
    LetterImages images = LetterImages::uniform_x(net.alphabet().size(), n, patterns.arity());
    SeriesMatrix f = network_occurrence_gf(net, patterns, images, n);
    std::vector<Rational> zeros(static_cast<size_t>(patterns.arity()), Rational(0));
    return coeff_extract(f.at(i, j), n, zeros);
}

}  // namespace clusternet

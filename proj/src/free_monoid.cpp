#include "clusternet/free_monoid.hpp"

#include "clusternet/errors.hpp"

namespace clusternet {

LetterImages::LetterImages(int order, int arity, std::vector<XSeries> images)
    : order_(order), arity_(arity), images_(std::move(images)) {
    for (const auto& img : images_) {
        if (img.order() != order_ || img.arity() != arity_) {
            throw ArityError("LetterImages: inconsistent order or arity");
        }
    }
}

LetterImages LetterImages::uniform_x(int letter_count, int order, int arity) {
    std::vector<XSeries> images(static_cast<size_t>(letter_count),
                                XSeries::x_power(order, arity, 1));
    return LetterImages(order, arity, std::move(images));
}

void LetterImages::set_image(int letter, XSeries image) {
    if (image.order() != order_ || image.arity() != arity_) {
        throw ArityError("LetterImages::set_image: inconsistent order or arity");
    }
    images_.at(static_cast<size_t>(letter)) = std::move(image);
}

namespace {

void check_admissible(const LetterImages& images) {
    for (int a = 0; a < images.letter_count(); ++a) {
        if (images.image(a).x_order() < 1) {
            throw AdmissibilityError("letter image has a nonzero constant term");
        }
    }
}

TPoly mark_monomial(const PatternSet& patterns, const std::vector<Mark>& marks) {
    std::vector<int> exps(static_cast<size_t>(patterns.arity()), 0);
    for (const auto& mark : marks) {
        exps[static_cast<size_t>(patterns.pattern(mark.pattern).var)] += 1;
    }
    return TPoly::monomial(patterns.arity(), exps, 1);
}

}  // namespace

XSeries word_image(const LetterImages& images, const Word& word) {
    XSeries out = XSeries::one(images.order(), images.arity());
    for (int letter : word) out = out * images.image(letter);
    return out;
}

XSeries cluster_gf(const PatternSet& patterns, const LetterImages& images, int N) {
    check_admissible(images);
    if (patterns.arity() != images.arity()) throw ArityError("cluster_gf: arity mismatch");
    XSeries total(N, patterns.arity());
    if (N < 2) return total;
    for (const auto& cluster : enumerate_clusters(patterns, N)) {
        XSeries img = word_image(images, cluster.word).truncated(N);
        total += img.scaled(mark_monomial(patterns, cluster.marks));
    }
    return total;
}

XSeries word_occurrence_gf(const Alphabet& alphabet, const PatternSet& patterns,
                           const LetterImages& images, int N) {
    check_admissible(images);
    if (patterns.max_letter() >= alphabet.size()) {
        throw ConfigError("pattern uses a letter outside the alphabet");
    }
    const int k = patterns.arity();
    std::vector<Rational> minus_one(static_cast<size_t>(k), Rational(-1));
    XSeries body = XSeries::one(N, k);
    for (int a = 0; a < alphabet.size(); ++a) body -= images.image(a).truncated(N);
    body -= cluster_gf(patterns, images, N).shifted_t(minus_one);
    return body.inverse();
}

XSeries marked_word_gf_by_enumeration(const Alphabet& alphabet, const PatternSet& patterns,
                                      const LetterImages& images, int N, long long budget) {
    check_admissible(images);
    long long total_words = 0;
    long long layer = 1;
    for (int n = 0; n <= N; ++n) {
        total_words += layer;
        if (total_words > budget) {
            throw BudgetError("marked_word_gf_by_enumeration: word enumeration exceeds budget");
        }
        layer *= alphabet.size();
    }

    XSeries total(N, patterns.arity());
    Word word;
    // Iterates all words of length <= N in lexicographic order per length.
    auto visit = [&](auto&& self, int remaining) -> void {
        std::vector<std::pair<int, int>> occurrences;  // (position, pattern)
        for (int u = 0; u < patterns.size(); ++u) {
            for (int pos : find_occurrences(word, patterns.pattern(u).word)) {
                occurrences.emplace_back(pos, u);
            }
        }
        if (occurrences.size() > 24) {
            throw BudgetError("marked_word_gf_by_enumeration: too many occurrence subsets");
        }
        XSeries img = word_image(images, word).truncated(N);
        if (!img.is_zero()) {
            TPoly weight(patterns.arity());
            for (size_t subset = 0; subset < (size_t{1} << occurrences.size()); ++subset) {
                std::vector<int> exps(static_cast<size_t>(patterns.arity()), 0);
                for (size_t b = 0; b < occurrences.size(); ++b) {
                    if (subset & (size_t{1} << b)) {
                        exps[static_cast<size_t>(patterns.pattern(occurrences[b].second).var)] += 1;
                    }
                }
                weight += TPoly::monomial(patterns.arity(), exps, 1);
            }
            total += img.scaled(weight);
        }
        if (remaining == 0) return;
        for (int a = 0; a < alphabet.size(); ++a) {
            word.push_back(a);
            self(self, remaining - 1);
            word.pop_back();
        }
    };
    visit(visit, N);
    return total;
}

}  // namespace clusternet

#pragma once

#include "clusternet/words.hpp"
#include "clusternet/xseries.hpp"

namespace clusternet {

// Homomorphism images of the letters of one alphabet, all at one truncation
// order and arity. Every image must have x-order >= 1 so that substitution
// into word sums converges; this is checked where images are consumed.
class LetterImages {
public:
    LetterImages(int order, int arity, std::vector<XSeries> images);

    // Every letter maps to x.
    static LetterImages uniform_x(int letter_count, int order, int arity);

    int order() const { return order_; }
    int arity() const { return arity_; }
    int letter_count() const { return static_cast<int>(images_.size()); }
    const XSeries& image(int letter) const { return images_.at(static_cast<size_t>(letter)); }
    void set_image(int letter, XSeries image);

private:
    int order_;
    int arity_;
    std::vector<XSeries> images_;
};

XSeries word_image(const LetterImages& images, const Word& word);

// Generating function for clusters formed by the pattern set: the sum over
// clusters of the image of the underlying word times one marking variable per
// mark. Only clusters of word length <= N can contribute.
XSeries cluster_gf(const PatternSet& patterns, const LetterImages& images, int N);

// Generating function for all words over the alphabet weighted by length and
// by occurrences of each pattern, computed from the cluster generating
// function: invert(1 - sum of letter images - cluster_gf at t-1).
XSeries word_occurrence_gf(const Alphabet& alphabet, const PatternSet& patterns,
                           const LetterImages& images, int N);

// Brute-force marked-word generating function: enumerates every word of
// length <= N and every subset of its pattern occurrences. Equals
// word_occurrence_gf with each t_v replaced by t_v + 1.
XSeries marked_word_gf_by_enumeration(const Alphabet& alphabet, const PatternSet& patterns,
                                      const LetterImages& images, int N,
                                      long long budget = 4'000'000);

}  // namespace clusternet

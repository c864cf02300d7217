#include "clusternet/words.hpp"

#include <algorithm>
#include <set>

#include "clusternet/errors.hpp"

namespace clusternet {

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw ConfigError("Alphabet must not be empty");
    std::set<std::string> seen;
    for (const auto& name : letters_) {
        if (name.empty()) throw ConfigError("Alphabet letters must be non-empty names");
        if (!seen.insert(name).second) throw ConfigError("Alphabet letter repeated: " + name);
    }
}

int Alphabet::index_of(const std::string& name) const {
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (letters_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

Word word_from_string(const Alphabet& alphabet, const std::string& text) {
    Word word;
    word.reserve(text.size());
    for (char c : text) {
        int idx = alphabet.index_of(std::string(1, c));
        if (idx < 0) throw ConfigError(std::string("unknown letter '") + c + "' in word " + text);
        word.push_back(idx);
    }
    return word;
}

std::string word_to_string(const Alphabet& alphabet, const Word& word) {
    std::string out;
    for (int idx : word) out += alphabet.letter(idx);
    return out;
}

PatternSet::PatternSet(std::vector<Pattern> patterns, int arity)
    : patterns_(std::move(patterns)), arity_(arity) {
    if (arity < 0) throw ConfigError("PatternSet arity must be non-negative");
    std::set<Word> seen;
    for (const auto& p : patterns_) {
        if (p.word.size() < 2) throw ConfigError("patterns must have length at least 2");
        if (p.var < 0 || p.var >= arity) throw ConfigError("pattern variable index out of range");
        if (!seen.insert(p.word).second) throw ConfigError("patterns must be pairwise distinct");
    }
}

int PatternSet::max_letter() const {
    int max_id = -1;
    for (const auto& p : patterns_) {
        for (int id : p.word) max_id = std::max(max_id, id);
    }
    return max_id;
}

std::vector<int> find_occurrences(const Word& word, const Word& pattern) {
    std::vector<int> positions;
    if (pattern.empty() || pattern.size() > word.size()) return positions;
    const int last_start = static_cast<int>(word.size() - pattern.size());
    for (int i = 0; i <= last_start; ++i) {
        if (std::equal(pattern.begin(), pattern.end(), word.begin() + i)) {
            positions.push_back(i + 1);
        }
    }
    return positions;
}

namespace {

int mark_end(const Mark& mark, const PatternSet& patterns) {
    return mark.pos + static_cast<int>(patterns.pattern(mark.pattern).word.size()) - 1;
}

void sort_marks(std::vector<Mark>& marks, const PatternSet& patterns) {
    std::sort(marks.begin(), marks.end(), [&](const Mark& a, const Mark& b) {
        const int ea = mark_end(a, patterns);
        const int eb = mark_end(b, patterns);
        if (a.pos != b.pos) return a.pos < b.pos;
        if (ea != eb) return ea < eb;
        return a.pattern < b.pattern;
    });
}

}  // namespace

MarkedWord make_marked_word(Word word, std::vector<Mark> marks, const PatternSet& patterns) {
    std::set<std::pair<int, int>> seen;
    for (const auto& mark : marks) {
        if (mark.pattern < 0 || mark.pattern >= patterns.size()) {
            throw ConfigError("mark references an unknown pattern");
        }
        const Word& beta = patterns.pattern(mark.pattern).word;
        if (mark.pos < 1 || mark.pos + static_cast<int>(beta.size()) - 1 > static_cast<int>(word.size())) {
            throw ConfigError("mark does not fit inside the word");
        }
        if (!std::equal(beta.begin(), beta.end(), word.begin() + (mark.pos - 1))) {
            throw ConfigError("mark is not a genuine occurrence");
        }
        if (!seen.insert({mark.pos, mark.pattern}).second) {
            throw ConfigError("duplicate mark");
        }
    }
    sort_marks(marks, patterns);
    return MarkedWord{std::move(word), std::move(marks)};
}

bool is_cluster(const MarkedWord& mw, const PatternSet& patterns) {
    if (mw.marks.empty()) return false;
    // With marks sorted by start, the cluster condition is equivalent to:
    // the first mark starts at 1, every later mark starts no later than the
    // covered prefix, and the covered prefix reaches the end of the word.
    if (mw.marks.front().pos != 1) return false;
    int cover = mark_end(mw.marks.front(), patterns);
    for (size_t i = 1; i < mw.marks.size(); ++i) {
        if (mw.marks[i].pos > cover) return false;
        cover = std::max(cover, mark_end(mw.marks[i], patterns));
    }
    return cover == static_cast<int>(mw.word.size());
}

namespace {

struct ClusterBuilder {
    const PatternSet& patterns;
    int max_len;
    std::vector<Cluster> out;
    Word word;
    std::vector<Mark> marks;

    // Extends the current cluster state (word of length `cover`, marks sorted
    // by (start, end)) by every admissible next mark. Each intermediate state
    // is itself a cluster, so it is emitted before recursing.
    void extend(int cover) {
        out.push_back(Cluster{word, marks});
        const Mark& last = marks.back();
        const int last_end = mark_end(last, patterns);
        for (int start = last.pos; start <= cover; ++start) {
            for (int u = 0; u < patterns.size(); ++u) {
                const Word& beta = patterns.pattern(u).word;
                const int end = start + static_cast<int>(beta.size()) - 1;
                // Keep the generated mark list sorted: same start requires a
                // strictly longer pattern (equal (start, end) pairs cannot
                // both occur since pattern words are distinct).
                if (start == last.pos && end <= last_end) continue;
                if (end > max_len) continue;
                bool consistent = true;
                for (int p = start; p <= std::min(cover, end); ++p) {
                    if (word[static_cast<size_t>(p - 1)] != beta[static_cast<size_t>(p - start)]) {
                        consistent = false;
                        break;
                    }
                }
                if (!consistent) continue;
                const size_t saved_len = word.size();
                for (int p = cover + 1; p <= end; ++p) {
                    word.push_back(beta[static_cast<size_t>(p - start)]);
                }
                marks.push_back(Mark{start, u});
                extend(std::max(cover, end));
                marks.pop_back();
                word.resize(saved_len);
            }
        }
    }
};

}  // namespace

std::vector<Cluster> enumerate_clusters(const PatternSet& patterns, int max_len) {
    if (max_len < 2) throw ConfigError("enumerate_clusters: max_len must be at least 2");
    ClusterBuilder builder{patterns, max_len, {}, {}, {}};
    for (int u = 0; u < patterns.size(); ++u) {
        const Word& beta = patterns.pattern(u).word;
        if (static_cast<int>(beta.size()) > max_len) continue;
        builder.word = beta;
        builder.marks = {Mark{1, u}};
        builder.extend(static_cast<int>(beta.size()));
    }
    std::sort(builder.out.begin(), builder.out.end());
    return builder.out;
}

}  // namespace clusternet

#include "clusternet/errors.hpp"
#include "clusternet/free_monoid.hpp"
#include "doctest.h"

using namespace clusternet;

namespace {

PatternSet acb_bc(const Alphabet& alphabet) {
    return PatternSet({Pattern{word_from_string(alphabet, "acb"), 0},
                       Pattern{word_from_string(alphabet, "bc"), 1}},
                      2);
}

// Direct occurrence-count oracle: sum over words of x^len * prod t_v^{bad_v}.
XSeries words_by_occurrences_direct(const Alphabet& alphabet, const PatternSet& patterns, int N) {
    XSeries total(N, patterns.arity());
    Word word;
    auto visit = [&](auto&& self) -> void {
        std::vector<int> exps(static_cast<size_t>(patterns.arity()), 0);
        for (int u = 0; u < patterns.size(); ++u) {
            exps[static_cast<size_t>(patterns.pattern(u).var)] +=
                static_cast<int>(find_occurrences(word, patterns.pattern(u).word).size());
        }
        total.set_coeff(static_cast<int>(word.size()),
                        total.coeff(static_cast<int>(word.size())) +
                            TPoly::monomial(patterns.arity(), exps, 1));
        if (static_cast<int>(word.size()) == N) return;
        for (int a = 0; a < alphabet.size(); ++a) {
            word.push_back(a);
            self(self);
            word.pop_back();
        }
    };
    visit(visit);
    return total;
}

}  // namespace

TEST_CASE("cluster generating functions") {
    const int N = 8;

    SUBCASE("acb/bc cluster gf") {
        Alphabet a3({"a", "b", "c"});
        PatternSet b = acb_bc(a3);
        XSeries L = cluster_gf(b, LetterImages::uniform_x(3, N, 2), N);
        XSeries expected(N, 2);
        expected.set_coeff(3, TPoly::variable(2, 0));
        expected.set_coeff(2, TPoly::variable(2, 1));
        expected.set_coeff(4, TPoly::variable(2, 0) * TPoly::variable(2, 1));
        CHECK(L == expected);
    }

    SUBCASE("single plateau pattern") {
        Alphabet ufd({"U", "F", "D"});
        for (int k = 0; k <= 3; ++k) {
            std::string w = "U" + std::string(static_cast<size_t>(k), 'F') + "D";
            PatternSet b({Pattern{word_from_string(ufd, w), 0}}, 1);
            XSeries L = cluster_gf(b, LetterImages::uniform_x(3, N, 1), N);
            XSeries expected(N, 1);
            expected.set_coeff(k + 2, TPoly::variable(1, 0));
            CHECK(L == expected);
        }
    }

    SUBCASE("peak/valley chains at length four") {
        Alphabet ufd({"U", "F", "D"});
        PatternSet b({Pattern{word_from_string(ufd, "UD"), 0},
                      Pattern{word_from_string(ufd, "DU"), 1}},
                     2);
        XSeries L = cluster_gf(b, LetterImages::uniform_x(3, N, 2), N);
        TPoly t1 = TPoly::variable(2, 0), t2 = TPoly::variable(2, 1);
        CHECK(L.coeff(4) == t1 * t1 * t2 + t1 * t2 * t2);
    }

    SUBCASE("letter image with constant term is rejected") {
        Alphabet a3({"a", "b", "c"});
        LetterImages images = LetterImages::uniform_x(3, N, 2);
        images.set_image(0, XSeries::one(N, 2));
        CHECK_THROWS_AS(cluster_gf(acb_bc(a3), images, N), AdmissibilityError);
    }
}

TEST_CASE("free monoid occurrence generating function") {
    const int N = 8;
    Alphabet a3({"a", "b", "c"});
    PatternSet b = acb_bc(a3);
    LetterImages images = LetterImages::uniform_x(3, N, 2);
    XSeries f = word_occurrence_gf(a3, b, images, N);

    SUBCASE("matches the closed rational form") {
        // 1 / (1 - 3x - x^2(t2-1) - x^3(t1-1) - x^4(t1-1)(t2-1))
        TPoly t1m1 = TPoly::variable(2, 0) - TPoly::constant(2, 1);
        TPoly t2m1 = TPoly::variable(2, 1) - TPoly::constant(2, 1);
        XSeries den = XSeries::one(N, 2) - XSeries::x_power(N, 2, 1, 3) -
                      XSeries::x_power(N, 2, 2).scaled(t2m1) - XSeries::x_power(N, 2, 3).scaled(t1m1) -
                      XSeries::x_power(N, 2, 4).scaled(t1m1 * t2m1);
        CHECK(f == den.inverse());
    }

    SUBCASE("avoidance specialization") {
        std::vector<Rational> zeros{Rational(0), Rational(0)};
        XSeries den0 = XSeries::from_rationals(
            N, 0, std::vector<Rational>{1, -3, 1, 1, -1});
        CHECK(f.eval_t(zeros) == den0.inverse());
    }

    SUBCASE("all-ones specialization is the free monoid identity") {
        std::vector<Rational> ones{Rational(1), Rational(1)};
        XSeries free_monoid = (XSeries::one(N, 0) - XSeries::x_power(N, 0, 1, 3)).inverse();
        CHECK(f.eval_t(ones) == free_monoid);
        for (int n = 0; n <= N; ++n) {
            CHECK(coeff_extract(f, n, ones) == pow_rational(Rational(3), n));
        }
    }

    SUBCASE("matches the direct occurrence-count oracle") {
        CHECK(f == words_by_occurrences_direct(a3, b, N));
    }
}

TEST_CASE("marked word enumeration identity") {
    const int N = 7;

    SUBCASE("two clusters live on the six-letter run") {
        Alphabet a1(std::vector<std::string>{"a"});
        PatternSet b({Pattern{word_from_string(a1, "aaaa"), 0}}, 1);
        auto clusters = enumerate_clusters(b, 6);
        int on_six = 0;
        for (const auto& c : clusters) {
            if (c.word.size() == 6) ++on_six;
        }
        CHECK(on_six == 2);
    }

    SUBCASE("marked words equal occurrence gf shifted by one") {
        Alphabet a3({"a", "b", "c"});
        PatternSet b = acb_bc(a3);
        LetterImages images = LetterImages::uniform_x(3, N, 2);
        XSeries brute = marked_word_gf_by_enumeration(a3, b, images, N);
        std::vector<Rational> plus_one{Rational(1), Rational(1)};
        CHECK(brute == word_occurrence_gf(a3, b, images, N).shifted_t(plus_one));
    }

    SUBCASE("non-reduced pattern set satisfies the same identity") {
        Alphabet a2({"a", "b"});
        PatternSet b({Pattern{word_from_string(a2, "aba"), 0},
                      Pattern{word_from_string(a2, "abab"), 1}},
                     2);
        LetterImages images = LetterImages::uniform_x(2, 8, 2);
        XSeries f = word_occurrence_gf(a2, b, images, 8);
        std::vector<Rational> plus_one{Rational(1), Rational(1)};
        CHECK(marked_word_gf_by_enumeration(a2, b, images, 8) == f.shifted_t(plus_one));
        CHECK(f == words_by_occurrences_direct(a2, b, 8));
    }

    SUBCASE("zero substitution counts plain words") {
        Alphabet a2({"a", "b"});
        PatternSet b({Pattern{word_from_string(a2, "ab"), 0}}, 1);
        XSeries brute = marked_word_gf_by_enumeration(a2, b, LetterImages::uniform_x(2, 6, 1), 6);
        std::vector<Rational> zero{Rational(0)};
        XSeries plain = brute.eval_t(zero);
        for (int n = 0; n <= 6; ++n) {
            CHECK(plain.coeff(n).constant_term() == pow_rational(Rational(2), n));
        }
    }

    SUBCASE("budget guard") {
        Alphabet a3({"a", "b", "c"});
        CHECK_THROWS_AS(marked_word_gf_by_enumeration(a3, acb_bc(a3), LetterImages::uniform_x(3, 7, 2),
                                                      7, /*budget=*/100),
                        BudgetError);
    }
}

#include <map>
#include <set>

#include "clusternet/errors.hpp"
#include "clusternet/network.hpp"
#include "doctest.h"

using namespace clusternet;

namespace {

// Loop {b} at vertex 0, {a,c} from 0 to 1, {b,c} from 1 back to 0.
MonoidNetwork two_vertex_example() {
    MonoidNetwork net(2, Alphabet({"a", "b", "c"}));
    net.add_arc(0, 0, {net.alphabet().index_of("b")});
    net.add_arc(0, 1, {net.alphabet().index_of("a"), net.alphabet().index_of("c")});
    net.add_arc(1, 0, {net.alphabet().index_of("b"), net.alphabet().index_of("c")});
    return net;
}

PatternSet acb_bc(const Alphabet& alphabet) {
    return PatternSet({Pattern{word_from_string(alphabet, "acb"), 0},
                       Pattern{word_from_string(alphabet, "bc"), 1}},
                      2);
}

// Exhaustive walk oracle: distinct words realized by walks from i to j, per
// length, optionally filtered to avoid every pattern.
std::map<std::pair<int, int>, std::map<int, std::set<Word>>> walk_words(const MonoidNetwork& net,
                                                                        int max_len) {
    std::map<std::pair<int, int>, std::map<int, std::set<Word>>> out;
    struct State {
        Word word;
        int end;
    };
    for (int start = 0; start < net.vertex_count(); ++start) {
        std::vector<State> frontier{State{{}, start}};
        out[{start, start}][0].insert(Word{});
        for (int len = 1; len <= max_len; ++len) {
            std::vector<State> next;
            for (const auto& state : frontier) {
                for (const auto& [arc, letters] : net.arcs()) {
                    if (arc.from != state.end) continue;
                    for (int letter : letters) {
                        State extended = state;
                        extended.word.push_back(letter);
                        extended.end = arc.to;
                        out[{start, arc.to}][len].insert(extended.word);
                        next.push_back(std::move(extended));
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    return out;
}

bool contains_any_pattern(const Word& word, const PatternSet& patterns) {
    for (int u = 0; u < patterns.size(); ++u) {
        if (!find_occurrences(word, patterns.pattern(u).word).empty()) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("network validation") {
    SUBCASE("two-vertex example is a monoid network") {
        auto result = validate_network(two_vertex_example(), 7);
        CHECK(result.ok);
        CHECK(result.checked_len == 7);
    }

    SUBCASE("diamond with one letter everywhere fails") {
        MonoidNetwork net(4, Alphabet(std::vector<std::string>{"a"}));
        net.add_arc(0, 1, {0});
        net.add_arc(0, 2, {0});
        net.add_arc(1, 3, {0});
        net.add_arc(2, 3, {0});
        auto result = validate_network(net, 4);
        REQUIRE_FALSE(result.ok);
        CHECK(result.checked_len == 2);
        REQUIRE(result.collision.has_value());
        CHECK(result.collision->first.size() == 2);
        CHECK(result.collision->first != result.collision->second);
    }

    SUBCASE("budget overflow reports the depth") {
        MonoidNetwork net(1, Alphabet({"a", "b", "c"}));
        net.add_arc(0, 0, {0, 1, 2});
        CHECK_THROWS_AS(validate_network(net, 20, /*budget=*/100), BudgetError);
    }
}

TEST_CASE("step matrix and walk generating functions") {
    const int N = 12;
    MonoidNetwork net = two_vertex_example();
    LetterImages images = LetterImages::uniform_x(3, N, 0);

    SUBCASE("step matrix entries") {
        SeriesMatrix steps = step_matrix(net, images);
        CHECK(steps.at(0, 0) == XSeries::x_power(N, 0, 1));
        CHECK(steps.at(0, 1) == XSeries::x_power(N, 0, 1, 2));
        CHECK(steps.at(1, 0) == XSeries::x_power(N, 0, 1, 2));
        CHECK(steps.at(1, 1).is_zero());
    }

    SUBCASE("identity minus zero") {
        SeriesMatrix zero(3, 4, 0);
        CHECK(invert_id_minus(zero) == SeriesMatrix::identity(3, 4, 0));
        SeriesMatrix with_const(2, 4, 0);
        with_const.at(0, 1) = XSeries::one(4, 0);
        CHECK_THROWS_AS(invert_id_minus(with_const), UnitError);
    }

    SUBCASE("entries against the displayed rational forms") {
        SeriesMatrix gamma = walk_gf_matrix(net, images);
        XSeries den = XSeries::from_rationals(N, 0, std::vector<Rational>{1, -1, -4});
        CHECK(gamma.at(0, 1) * den == XSeries::x_power(N, 0, 1, 2));
        CHECK(gamma.at(1, 0) * den == XSeries::x_power(N, 0, 1, 2));
        CHECK(gamma.at(0, 0) * den == XSeries::one(N, 0));
        CHECK(gamma.at(1, 1) * den == XSeries::one(N, 0) - XSeries::x_power(N, 0, 1));
    }

    SUBCASE("coefficients count distinct walk words") {
        SeriesMatrix gamma_small = walk_gf_matrix(net, LetterImages::uniform_x(3, 8, 0));
        auto oracle = walk_words(net, 8);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int n = 0; n <= 8; ++n) {
                    Rational expected = static_cast<long long>(oracle[{i, j}][n].size());
                    CHECK(gamma_small.at(i, j).coeff(n).constant_term() == expected);
                }
            }
        }
    }
}

TEST_CASE("network occurrence generating functions") {
    const int N = 12;
    MonoidNetwork net = two_vertex_example();
    PatternSet b = acb_bc(net.alphabet());
    LetterImages images = LetterImages::uniform_x(3, N, 2);
    SeriesMatrix f = network_occurrence_gf(net, b, images, N);

    TPoly t1 = TPoly::variable(2, 0), t2 = TPoly::variable(2, 1);
    TPoly one2 = TPoly::constant(2, 1);

    SUBCASE("cluster matrix matches the worked example") {
        SeriesMatrix L = network_cluster_matrix(net, b, images, N);
        XSeries expected00 = XSeries::x_power(N, 2, 3).scaled(t1);
        XSeries expected01 = XSeries::x_power(N, 2, 2).scaled(t2) + XSeries::x_power(N, 2, 4).scaled(t1 * t2);
        XSeries expected11 = XSeries::x_power(N, 2, 2).scaled(t2);
        CHECK(L.at(0, 0) == expected00);
        CHECK(L.at(0, 1) == expected01);
        CHECK(L.at(1, 0).is_zero());
        CHECK(L.at(1, 1) == expected11);
    }

    SUBCASE("walk words by occurrences, multiplied back") {
        // (0,1) entry times 1 - x - (3+t2)x^2 + (2-t1-t2)x^3 - (1-t1-t2+t1t2)x^5
        // equals 2x - (1-t2)x^2 + (1-t1-t2+t1t2)x^4.
        TPoly mixed = one2 - t1 - t2 + t1 * t2;
        XSeries den(N, 2);
        den.set_coeff(0, one2);
        den.set_coeff(1, -one2);
        den.set_coeff(2, -(TPoly::constant(2, 3) + t2));
        den.set_coeff(3, TPoly::constant(2, 2) - t1 - t2);
        den.set_coeff(5, -mixed);
        XSeries num(N, 2);
        num.set_coeff(1, TPoly::constant(2, 2));
        num.set_coeff(2, -(one2 - t2));
        num.set_coeff(4, mixed);
        CHECK(f.at(0, 1) * den == num);
    }

    SUBCASE("avoidance specialization multiplied back") {
        std::vector<Rational> zeros{Rational(0), Rational(0)};
        XSeries f01 = f.at(0, 1).eval_t(zeros);
        XSeries den = XSeries::from_rationals(N, 0, std::vector<Rational>{1, -1, -3, 2, 0, -1});
        XSeries num(N, 0);
        num.set_coeff(1, TPoly::constant(0, 2));
        num.set_coeff(2, TPoly::constant(0, -1));
        num.set_coeff(4, TPoly::constant(0, 1));
        CHECK(f01 * den == num);
    }

    SUBCASE("all marking variables at one gives the walk gf") {
        std::vector<Rational> ones{Rational(1), Rational(1)};
        SeriesMatrix gamma = walk_gf_matrix(net, LetterImages::uniform_x(3, N, 0));
        CHECK(f.eval_t(ones) == gamma);
    }

    SUBCASE("defining inverse identity") {
        std::vector<Rational> minus_one{Rational(-1), Rational(-1)};
        SeriesMatrix body = step_matrix(net, images) +
                            network_cluster_matrix(net, b, images, N).shifted_t(minus_one);
        SeriesMatrix product = (SeriesMatrix::identity(2, N, 2) - body) * f;
        CHECK(product == SeriesMatrix::identity(2, N, 2));
    }

    SUBCASE("avoidance counts match filtered walk enumeration") {
        std::vector<Rational> zeros{Rational(0), Rational(0)};
        auto oracle = walk_words(net, 8);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int n = 0; n <= 8; ++n) {
                    long long count = 0;
                    for (const auto& word : oracle[{i, j}][n]) {
                        if (!contains_any_pattern(word, b)) ++count;
                    }
                    CHECK(coeff_extract(f.at(i, j), n, zeros) == Rational(count));
                }
            }
        }
    }

    SUBCASE("integer non-negative coefficients at integer marks") {
        for (const auto& at : {std::vector<Rational>{2, 3}, std::vector<Rational>{0, 5}}) {
            for (int n = 0; n <= N; ++n) {
                Rational value = coeff_extract(f.at(0, 1), n, at);
                CHECK(is_integer(value));
                CHECK(value >= 0);
            }
        }
    }

    SUBCASE("single-vertex network reproduces the free monoid gf") {
        MonoidNetwork loop(1, net.alphabet());
        loop.add_arc(0, 0, {0, 1, 2});
        SeriesMatrix g = network_occurrence_gf(loop, b, images, N);
        CHECK(g.at(0, 0) == word_occurrence_gf(net.alphabet(), b, images, N));
    }
}

TEST_CASE("weighted networks and avoidance probabilities") {
    Alphabet ab({"a", "b"});
    PatternSet forbid_ab({Pattern{word_from_string(ab, "ab"), 0}}, 1);

    auto coin_flip = [&]() {
        MonoidNetwork net(1, ab);
        net.add_arc(0, 0, {0, 1});
        net.set_weight(0, 0, 0, Rational(1, 2));
        net.set_weight(1, 0, 0, Rational(1, 2));
        return net;
    };

    SUBCASE("unit weights reduce to the unweighted gf") {
        MonoidNetwork weighted = two_vertex_example();
        for (const auto& [arc, letters] : weighted.arcs()) {
            for (int letter : letters) weighted.set_weight(letter, arc.from, arc.to, 1);
        }
        MonoidNetwork plain = two_vertex_example();
        PatternSet b = acb_bc(plain.alphabet());
        LetterImages images = LetterImages::uniform_x(3, 10, 2);
        CHECK(network_occurrence_gf(weighted, b, images, 10) ==
              network_occurrence_gf(plain, b, images, 10));
    }

    SUBCASE("missing weight is a configuration error") {
        MonoidNetwork net(1, ab);
        net.add_arc(0, 0, {0, 1});
        net.set_weight(0, 0, 0, Rational(1, 2));
        LetterImages images = LetterImages::uniform_x(2, 6, 1);
        CHECK_THROWS_AS(step_matrix(net, images), ConfigError);
    }

    SUBCASE("coin-flip avoidance") {
        MonoidNetwork net = coin_flip();
        LetterImages images = LetterImages::uniform_x(2, 8, 1);
        SeriesMatrix f = network_occurrence_gf(net, forbid_ab, images, 8);
        std::vector<Rational> zero{Rational(0)};
        CHECK(coeff_extract(f.at(0, 0), 2, zero) == Rational(3, 4));
        std::vector<Rational> one{Rational(1)};
        for (int n = 0; n <= 8; ++n) {
            CHECK(coeff_extract(f.at(0, 0), n, one) == 1);
        }
        CHECK(avoidance_probability(net, forbid_ab, 2, 0, 0) == Rational(3, 4));
        CHECK(avoidance_probability(net, forbid_ab, 0, 0, 0) == 1);
    }

    SUBCASE("off-diagonal empty-word probability is zero") {
        MonoidNetwork net(2, ab);
        net.add_arc(0, 1, {0, 1});
        net.add_arc(1, 0, {0, 1});
        for (const auto& [arc, letters] : net.arcs()) {
            for (int letter : letters) net.set_weight(letter, arc.from, arc.to, Rational(1, 2));
        }
        CHECK(avoidance_probability(net, forbid_ab, 0, 0, 1) == 0);
        CHECK(avoidance_probability(net, forbid_ab, 0, 0, 0) == 1);
    }

    SUBCASE("non-stochastic weights rejected") {
        MonoidNetwork net(1, ab);
        net.add_arc(0, 0, {0, 1});
        net.set_weight(0, 0, 0, Rational(1, 2));
        net.set_weight(1, 0, 0, Rational(1, 3));
        CHECK_THROWS_AS(avoidance_probability(net, forbid_ab, 2, 0, 0), ConfigError);
    }
}

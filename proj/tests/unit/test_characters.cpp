#include <doctest.h>

#include "oracle.hpp"
#include "zigzag/characters.hpp"
#include "zigzag/composition.hpp"
#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/qsym.hpp"
#include "zigzag/rational.hpp"
#include "zigzag/series.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace zigzag;

namespace {

OrientedInterval up(const char* l, const char* r) {
    return {parse_rat(l), parse_rat(r), Orientation::up};
}
OrientedInterval down(const char* l, const char* r) {
    return {parse_rat(l), parse_rat(r), Orientation::down};
}

} // namespace

TEST_CASE("elementary characters") {
    auto plus = elementary_plus();
    auto minus = elementary_minus();
    CHECK(plus(Composition{}) == 1);
    CHECK(plus(Composition({7})) == 1);
    CHECK(plus(Composition({2, 1})) == 0);
    CHECK(minus(Composition({1, 1, 1})) == 1);
    CHECK(minus(Composition({3})) == 0);
    CHECK(minus(Composition({1})) == 1);

    // conjugation swaps the two
    for (const auto& c : compositions_of(6)) CHECK(plus(c) == minus(conjugate(c)));
}

TEST_CASE("uniform character") {
    auto u = uniform_character();
    CHECK(u(Composition{}) == 1);
    CHECK(u(Composition({1})) == 1);
    CHECK(u(Composition({2, 1})) == Rat(1, 6));
    CHECK(u(Composition({3, 1, 4})) == Rat(1, factorial(8)));

    // shape masses d(c) * p(c) sum to 1 on each level
    for (int n = 1; n <= 7; ++n) {
        Rat total = 0;
        for (const auto& c : compositions_of(n)) total += Rat(dimension(c)) * u(c);
        CHECK(total == 1);
    }
}

TEST_CASE("characters satisfy the backward recursion") {
    for (const auto& chi : {elementary_plus(), elementary_minus(), uniform_character()}) {
        auto report = check_recursion(chi, 7);
        CHECK(report.passed);
        CHECK(report.failures.empty());
    }
}

TEST_CASE("check_recursion flags a broken functional") {
    CharacterEvaluator broken("broken", [](const Composition& c) {
        return c == Composition({2}) ? Rat(1, 3) : uniform_character()(c);
    });
    auto report = check_recursion(broken, 4);
    CHECK_FALSE(report.passed);
    CHECK_FALSE(report.failures.empty());
}

TEST_CASE("m_mix: degenerate and validation cases") {
    // a single factor of weight 1 reproduces the factor
    auto single = m_mix({elementary_plus()}, {Rat(1)});
    for (int n = 0; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) CHECK(single(c) == elementary_plus()(c));

    // zero-weight factors are inert
    auto padded = m_mix({elementary_minus(), elementary_plus()}, {Rat(0), Rat(1)});
    for (const auto& c : compositions_of(5)) CHECK(padded(c) == elementary_plus()(c));

    CHECK_THROWS_AS(m_mix({elementary_plus()}, {Rat(1, 2)}), std::invalid_argument);
    CHECK_THROWS_AS(m_mix({elementary_plus()}, {Rat(1), Rat(0)}), std::invalid_argument);
    CHECK_THROWS_AS(m_mix({elementary_plus(), elementary_minus()}, {Rat(3, 2), Rat(-1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(m_mix({}, {}), std::invalid_argument);
}

TEST_CASE("m_mix matches the literal splitting sum") {
    std::vector<std::vector<CharacterEvaluator>> factor_sets{
        {elementary_plus(), elementary_minus()},
        {elementary_plus(), uniform_character(), elementary_plus()},
        {uniform_character(), elementary_minus()},
    };
    std::vector<std::vector<Rat>> weight_sets{
        {Rat(1, 3), Rat(2, 3)},
        {Rat(1, 4), Rat(1, 2), Rat(1, 4)},
        {Rat(2, 5), Rat(3, 5)},
    };
    for (std::size_t i = 0; i < factor_sets.size(); ++i) {
        auto mixed = m_mix(factor_sets[i], weight_sets[i]);
        for (int n = 0; n <= 6; ++n)
            for (const auto& c : compositions_of(n))
                CHECK(mixed(c) == oracle::splitting_sum_oracle(factor_sets[i], weight_sets[i], c));
    }
}

TEST_CASE("mixed characters still satisfy the backward recursion") {
    auto mixed = m_mix({elementary_plus(), uniform_character(), elementary_minus()},
                       {Rat(1, 2), Rat(1, 6), Rat(1, 3)});
    CHECK(check_recursion(mixed, 6).passed);
}

TEST_CASE("paintbox character: pinned bi-interval values") {
    // down on (0, phi), up on (phi, 1): hooks get phi^l * (1-phi)^k
    Rat phi(2, 5);
    OrientedPaintbox pb({down("0", "2/5"), up("2/5", "1")});
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : compositions_of(n)) {
            bool hook = true;
            const auto& parts = c.parts();
            for (std::size_t i = 0; i + 1 < parts.size(); ++i)
                if (parts[i] != 1) hook = false;
            int l = c.length() - 1;      // ones on top
            int k = parts.back() - 1;    // final row minus one
            Rat want = hook ? rat_pow(phi, l) * rat_pow(1 - phi, k) : Rat(0);
            CHECK(evaluate(pb, c) == want);
        }
}

TEST_CASE("paintbox character: full-interval and empty cases") {
    OrientedPaintbox all_up({up("0", "1")});
    OrientedPaintbox all_down({down("0", "1")});
    for (const auto& c : compositions_of(6)) {
        CHECK(evaluate(all_up, c) == elementary_plus()(c));
        CHECK(evaluate(all_down, c) == elementary_minus()(c));
        CHECK(evaluate(OrientedPaintbox{}, c) == uniform_character()(c));
    }
}

TEST_CASE("paintbox character: equally spaced up intervals give the shuffle pmf") {
    for (long a : {2L, 3L}) {
        std::vector<OrientedInterval> ivs;
        for (long i = 0; i < a; ++i)
            ivs.push_back({Rat(i, a), Rat(i + 1, a), Orientation::up});
        OrientedPaintbox pb(std::move(ivs));
        for (int n = 1; n <= 6; ++n)
            for (const auto& c : compositions_of(n))
                CHECK(evaluate(pb, c) == a_shuffle_pmf(n, c.length(), a));
    }
}

TEST_CASE("a_shuffle_pmf: direct values and normalization") {
    CHECK(a_shuffle_pmf(3, 1, 2) == Rat(1, 2));
    CHECK(a_shuffle_pmf(3, 2, 2) == Rat(1, 8));
    CHECK(a_shuffle_pmf(3, 3, 2) == 0);
    CHECK_THROWS_AS(a_shuffle_pmf(3, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(a_shuffle_pmf(3, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(a_shuffle_pmf(3, 1, 0), std::invalid_argument);

    for (long a : {2L, 3L, 5L})
        for (int n = 1; n <= 6; ++n) {
            Rat total = 0;
            for (int k = 1; k <= n; ++k) total += Rat(oracle::eulerian(n, k)) * a_shuffle_pmf(n, k, a);
            CHECK(total == 1);
        }

    // large a approaches the uniform value 1/n!
    double big = to_double(a_shuffle_pmf(5, 3, 1000000));
    CHECK(std::abs(big - 1.0 / 120.0) < 1e-5 / 120.0);
}

TEST_CASE("paintbox character satisfies the backward recursion") {
    OrientedPaintbox pb({up("0", "1/4"), down("1/3", "1/2"), up("2/3", "3/4")});
    CHECK(check_recursion(paintbox_character(pb), 6).passed);
}

TEST_CASE("mirror of the paintbox evaluates the conjugate") {
    std::vector<OrientedPaintbox> boxes{
        OrientedPaintbox({up("0", "1/4"), down("1/3", "1/2"), up("2/3", "3/4")}),
        OrientedPaintbox({down("1/8", "5/8")}),
        OrientedPaintbox({up("0", "1/2"), down("1/2", "1")}),
    };
    for (const auto& pb : boxes)
        for (const auto& c : compositions_of(6))
            CHECK(evaluate(mirror(pb), c) == evaluate(pb, conjugate(c)));
}

TEST_CASE("paintbox characters are multiplicative") {
    OrientedPaintbox pb({up("0", "1/4"), down("1/2", "5/6")});
    auto chi = paintbox_character(pb);
    std::vector<QSymElement> elems{
        QSymElement::term(Basis::F, Composition({2, 1})),
        QSymElement::term(Basis::F, Composition({1, 1})) * Rat(2) +
            QSymElement::term(Basis::F, Composition({2}), Rat(1, 3)),
        QSymElement::term(Basis::F, Composition({1})),
    };
    for (const auto& x : elems)
        for (const auto& y : elems)
            CHECK(evaluate_qsym(chi, f_product(x, y)) ==
                  evaluate_qsym(chi, x) * evaluate_qsym(chi, y));
}

TEST_CASE("evaluate_qsym basics") {
    auto u = uniform_character();
    CHECK(evaluate_qsym(u, QSymElement::unit()) == 1);
    CHECK(evaluate_qsym(u, QSymElement(Basis::F)) == 0);
    auto x = QSymElement::term(Basis::F, Composition({2}), Rat(6)) +
             QSymElement::term(Basis::F, Composition({1, 1}), Rat(-2));
    CHECK(evaluate_qsym(u, x) == Rat(6, 2) - Rat(2, 2));
    CHECK_THROWS_AS(evaluate_qsym(u, QSymElement::term(Basis::M, Composition({2}))),
                    std::invalid_argument);
}

TEST_CASE("rank extracts sorted interval lengths") {
    OrientedPaintbox pb({up("0", "1/4"), up("1/2", "3/4"), down("3/4", "7/8")});
    auto freqs = rank(pb);
    CHECK(freqs.alpha == std::vector<Rat>{Rat(1, 4), Rat(1, 4)});
    CHECK(freqs.beta == std::vector<Rat>{Rat(1, 8)});
    CHECK(freqs.gamma() == Rat(3, 8));

    auto none = rank(OrientedPaintbox{});
    CHECK(none.alpha.empty());
    CHECK(none.beta.empty());
    CHECK(none.gamma() == 1);
}

TEST_CASE("one-row values reproduce the h generating series") {
    std::vector<OrientedPaintbox> boxes{
        OrientedPaintbox({up("0", "1/3"), down("1/2", "3/4")}),
        OrientedPaintbox({down("0", "1")}),
        OrientedPaintbox{},
        OrientedPaintbox({up("1/8", "1/4"), up("1/4", "1/2"), down("5/8", "1")}),
    };
    for (const auto& pb : boxes) {
        auto h = h_values(rank(pb), 7);
        for (int n = 1; n <= 7; ++n)
            CHECK(evaluate(pb, Composition({n})) == h[n]);
    }
}

TEST_CASE("mixing two paintbox characters multiplies their scaled h series") {
    OrientedPaintbox a({up("0", "1/2"), down("1/2", "2/3")});
    OrientedPaintbox b({down("1/4", "3/4")});
    Rat w1(1, 3), w2(2, 3);
    auto mixed = m_mix({paintbox_character(a), paintbox_character(b)}, {w1, w2});

    auto ha = h_values(rank(a), 8).scale_argument(w1);
    auto hb = h_values(rank(b), 8).scale_argument(w2);
    auto prod = ha * hb;
    for (int n = 1; n <= 8; ++n) CHECK(mixed(Composition({n})) == prod[n]);
}

TEST_CASE("schur projection of a paintbox character") {
    std::vector<OrientedPaintbox> boxes{
        OrientedPaintbox({up("0", "1/2")}),
        OrientedPaintbox({up("0", "1/4"), down("1/4", "1/2"), down("3/4", "1")}),
        OrientedPaintbox{},
    };
    for (const auto& pb : boxes) {
        auto chi = paintbox_character(pb);
        auto freqs = rank(pb);
        for (int n = 1; n <= 5; ++n)
            for (const auto& partition : partitions_of(n))
                CHECK(evaluate_qsym(chi, schur_to_f(partition)) == schur_value(freqs, partition));
    }
}

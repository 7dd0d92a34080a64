#include <doctest.h>

#include "oracle.hpp"
#include "zigzag/characters.hpp"
#include "zigzag/composition.hpp"
#include "zigzag/permutation.hpp"
#include "zigzag/rational.hpp"

#include <cstddef>
#include <set>
#include <vector>

using namespace zigzag;

TEST_CASE("enumerate_by_shape partitions the symmetric group") {
    for (int n = 1; n <= 7; ++n) {
        auto classes = oracle::enumerate_by_shape(n);
        CHECK(classes.size() == (std::size_t{1} << (n - 1)));
        std::size_t total = 0;
        std::set<Permutation> all;
        for (const auto& [shape, perms] : classes) {
            CHECK(shape.size() == n);
            CHECK_FALSE(perms.empty());
            for (const auto& p : perms) {
                CHECK(zigzag_shape(p) == shape);
                all.insert(p);
            }
            total += perms.size();
        }
        CHECK(Int(total) == factorial(n));
        CHECK(all.size() == total);
    }
}

TEST_CASE("class sizes are conjugation symmetric") {
    for (int n = 1; n <= 7; ++n) {
        auto classes = oracle::enumerate_by_shape(n);
        for (const auto& [shape, perms] : classes)
            CHECK(classes.at(conjugate(shape)).size() == perms.size());
    }
}

TEST_CASE("eulerian numbers") {
    CHECK(oracle::eulerian(1, 1) == 1);
    CHECK(oracle::eulerian(4, 2) == 11);
    CHECK(oracle::eulerian(4, 3) == 11);
    CHECK(oracle::eulerian(5, 3) == 66);
    for (int n = 1; n <= 9; ++n) {
        Int row = 0;
        for (int k = 1; k <= n; ++k) {
            row += oracle::eulerian(n, k);
            CHECK(oracle::eulerian(n, k) == oracle::eulerian(n, n + 1 - k));
        }
        CHECK(row == factorial(n));
    }
    // tie the two enumerations together: class sizes by run count
    for (int n = 1; n <= 7; ++n) {
        auto classes = oracle::enumerate_by_shape(n);
        for (int k = 1; k <= n; ++k) {
            std::size_t total = 0;
            for (const auto& [shape, perms] : classes)
                if (shape.length() == k) total += perms.size();
            CHECK(Int(total) == oracle::eulerian(n, k));
        }
    }
}

TEST_CASE("shuffle oracle counts all interleavings") {
    auto counts = oracle::shuffle_product_oracle(Composition({1}), Composition({1}));
    CHECK(counts.at(Composition({2})) == 1);
    CHECK(counts.at(Composition({1, 1})) == 1);
    for (const auto& a : compositions_of(3))
        for (const auto& b : compositions_of(3)) {
            Int total = 0;
            for (const auto& [shape, k] : oracle::shuffle_product_oracle(a, b)) {
                CHECK(shape.size() == 6);
                total += k;
            }
            CHECK(total == binomial(Int(6), 3));
        }
}

TEST_CASE("kernel oracle base cases") {
    for (const auto& c : compositions_of(5)) {
        CHECK(oracle::kernel_oracle(c, c) == 1);
        CHECK(oracle::kernel_oracle(Composition{}, c) ==
              Int(oracle::enumerate_by_shape(5).at(c).size()));
        CHECK(oracle::kernel_oracle(Composition({1}), c) ==
              oracle::kernel_oracle(Composition{}, c));
    }
    CHECK(oracle::kernel_oracle(Composition({3}), Composition({1, 2})) == 0);
}

TEST_CASE("splitting oracle on a single factor is the factor") {
    for (const auto& c : compositions_of(5)) {
        CHECK(oracle::splitting_sum_oracle({uniform_character()}, {Rat(1)}, c) ==
              uniform_character()(c));
        CHECK(oracle::splitting_sum_oracle({elementary_plus()}, {Rat(1)}, c) ==
              elementary_plus()(c));
    }
}

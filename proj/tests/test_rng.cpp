#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "uavtraj/rng.hpp"

using uavtraj::Rng;

TEST_SUITE("rng") {

TEST_CASE("same seed reproduces the exact stream") {
    Rng a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.uniform() == b.uniform());
    }
}

TEST_CASE("different seeds diverge") {
    Rng a(1), b(2);
    int equal = 0;
    for (int i = 0; i < 100; ++i) {
        if (a.uniform() == b.uniform()) ++equal;
    }
    CHECK(equal < 5);
}

TEST_CASE("uniform stays in the half-open unit interval") {
    Rng rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("uniform_pos never returns zero") {
    Rng rng(7);
    for (int i = 0; i < 100000; ++i) {
        CHECK(rng.uniform_pos() > 0.0);
    }
}

TEST_CASE("ranged uniform respects bounds and midpoint statistics") {
    Rng rng(99);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform(-3.0, 5.0);
        CHECK(u >= -3.0);
        CHECK(u < 5.0);
        sum += u;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("below produces every value in range") {
    Rng rng(5);
    std::set<int> seen;
    for (int i = 0; i < 1000; ++i) {
        const int v = rng.below(7);
        CHECK(v >= 0);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
}

TEST_CASE("sign is plus-minus one with both values appearing") {
    Rng rng(11);
    int plus = 0, minus = 0;
    for (int i = 0; i < 1000; ++i) {
        const double s = rng.sign();
        CHECK((s == 1.0 || s == -1.0));
        (s > 0 ? plus : minus)++;
    }
    CHECK(plus > 400);
    CHECK(minus > 400);
}

TEST_CASE("normal is finite with sane first and second moments") {
    Rng rng(13);
    double sum = 0.0, sq = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        REQUIRE(std::isfinite(z));
        sum += z;
        sq += z * z;
    }
    CHECK(sum / n == doctest::Approx(0.0).epsilon(0.02));
    CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("permutation is a bijection over 0..n-1") {
    Rng rng(3);
    const auto p = rng.permutation(50);
    REQUIRE(p.size() == 50);
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < 50; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("permutation order depends on the seed") {
    Rng a(1), b(2);
    CHECK(a.permutation(20) != b.permutation(20));
}

}  // TEST_SUITE

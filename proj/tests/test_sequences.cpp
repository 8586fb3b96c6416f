#include <fbase/sequence.hpp>

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <thread>

using namespace fbase;

TEST_CASE("builtin sequence values") {
    const Sequence fib = Sequence::fibonacci();
    CHECK(fib.value(5) == 5);
    const Nat expected[] = {1, 1, 1, 2, 3, 5, 8, 13, 21};
    for (std::size_t n = 0; n < std::size(expected); ++n) CHECK(fib.value(n) == expected[n]);

    CHECK(Sequence::constant(2).value(7) == 2);
    CHECK(Sequence::gauss(2).value(3) == 7);
    CHECK(Sequence::gauss(2).value(0) == 0);
    CHECK(Sequence::gauss(3).value(4) == 40);
    CHECK(Sequence::natural().value(0) == 0);
    CHECK(Sequence::natural().value(12) == 12);
}

TEST_CASE("level widths apply the one-point root convention") {
    CHECK(Sequence::natural().level_width(0) == 1);
    CHECK(Sequence::gauss(2).level_width(0) == 1);
    CHECK(Sequence::fibonacci().level_width(0) == 1);
    CHECK(Sequence::constant(3).level_width(0) == 3);
    CHECK(Sequence::natural().level_width(4) == 4);
}

TEST_CASE("explicit sequences") {
    const Sequence f = Sequence::from_values({Nat(1), Nat(2), Nat(3), Nat(5)});
    CHECK(f.value(3) == 5);
    CHECK_THROWS_AS(f.value(4), IndexBeyondExplicitList);
    CHECK_THROWS_AS(Sequence::from_values({}), InvalidSequenceSpec);
    CHECK_THROWS_AS(Sequence::from_values({Nat(1), Nat(0)}), InvalidSequenceSpec);
    CHECK_NOTHROW(Sequence::from_values({Nat(0), Nat(1)})); // 0 allowed at index 0 only
}

TEST_CASE("spec grammar") {
    CHECK(Sequence::parse_spec("natural") == Sequence::natural());
    CHECK(Sequence::parse_spec("fibonacci") == Sequence::fibonacci());
    CHECK(Sequence::parse_spec("const:2") == Sequence::constant(2));
    CHECK(Sequence::parse_spec("gauss:3") == Sequence::gauss(3));
    CHECK(Sequence::parse_spec(" const:10 ") == Sequence::constant(10));
    CHECK(Sequence::parse_spec("explicit:1,2,3") == Sequence::from_values({Nat(1), Nat(2), Nat(3)}));
    CHECK(Sequence::parse_spec("const:2") != Sequence::constant(3));
    CHECK(Sequence::parse_spec("natural") != Sequence::fibonacci());

    CHECK_THROWS_AS(Sequence::parse_spec("bogus"), InvalidSequenceSpec);
    CHECK_THROWS_AS(Sequence::parse_spec("const:"), InvalidSequenceSpec);
    CHECK_THROWS_AS(Sequence::parse_spec("const:0"), InvalidSequenceSpec);
    CHECK_THROWS_AS(Sequence::parse_spec("gauss:x"), InvalidSequenceSpec);
    CHECK_THROWS_AS(Sequence::parse_spec("file:/no/such/file"), InvalidSequenceSpec);
}

TEST_CASE("file sequences parse whitespace and comma separated values") {
    const std::string path = "seq_values_test.txt";
    {
        std::ofstream out(path);
        out << "1, 2 3\n5";
    }
    const Sequence f = Sequence::parse_spec("file:" + path);
    CHECK(f.value(0) == 1);
    CHECK(f.value(1) == 2);
    CHECK(f.value(2) == 3);
    CHECK(f.value(3) == 5);
    CHECK(f.spec_string() == "file:" + path);
    std::remove(path.c_str());
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(Sequence::fibonacci(), 1, 4) == 6);
    CHECK(rising_factorial(Sequence::fibonacci(), 3, 0) == 1);
    CHECK(rising_factorial(Sequence::natural(), 3, 2) == 12);
    CHECK_THROWS_AS(rising_factorial(Sequence::natural(), 0, 2), InvalidRange);
}

TEST_CASE("f-factorial") {
    CHECK(f_factorial(Sequence::fibonacci(), 5) == 30);
    CHECK(f_factorial(Sequence::natural(), 4) == 24);
    CHECK(f_factorial(Sequence::gauss(2), 0) == 1);

    for (const Sequence& f : {Sequence::natural(), Sequence::fibonacci(), Sequence::constant(2),
                              Sequence::gauss(2), Sequence::gauss(3)}) {
        for (std::size_t n = 0; n <= 20; ++n) {
            CHECK(rising_factorial(f, 1, n) == f_factorial(f, n));
        }
    }
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(Sequence::fibonacci(), 6, 3) == 120);
    CHECK(falling_factorial(Sequence::natural(), 5, 2) == 20);
    CHECK(falling_factorial(Sequence::gauss(3), 7, 0) == 1);
    CHECK_THROWS_AS(falling_factorial(Sequence::natural(), 3, 4), InvalidRange);
}

TEST_CASE("fnomial values") {
    CHECK(fnomial(Sequence::fibonacci(), 6, 3) == 60);
    CHECK(fnomial(Sequence::natural(), 5, 2) == 10);
    CHECK(fnomial(Sequence::gauss(2), 7, 0) == 1);
    CHECK_THROWS_AS(fnomial(Sequence::natural(), 2, 3), InvalidRange);

    SECTION("symmetry") {
        for (const Sequence& f : {Sequence::natural(), Sequence::fibonacci(), Sequence::gauss(2)}) {
            for (std::size_t n = 0; n <= 15; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    CHECK(fnomial(f, n, k) == fnomial(f, n, n - k));
                }
            }
        }
    }

    SECTION("natural matches the Pascal oracle") {
        const auto pascal = oracle::pascal_triangle(20);
        const Sequence nat = Sequence::natural();
        for (std::size_t n = 0; n <= 20; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                REQUIRE(is_integral(fnomial(nat, n, k)));
                CHECK(fnomial(nat, n, k) == pascal[n][k]);
            }
        }
    }

    SECTION("fibonacci matches the Fibonomial recurrence oracle") {
        const auto tri = oracle::fibonomial_triangle(14);
        const Sequence fib = Sequence::fibonacci();
        for (std::size_t n = 0; n <= 14; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(fnomial(fib, n, k) == tri[n][k]);
            }
        }
        CHECK(tri[6][3] == 60);
    }

    SECTION("gauss matches the q-Pascal oracle") {
        for (unsigned q : {2u, 3u}) {
            const auto tri = oracle::gaussian_binomial_table(q, 12);
            const Sequence g = Sequence::gauss(q);
            for (std::size_t n = 0; n <= 12; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    CHECK(fnomial(g, n, k) == tri[n][k]);
                }
            }
        }
    }

    SECTION("constant sequences collapse to 1") {
        for (unsigned p : {2u, 10u}) {
            const Sequence c = Sequence::constant(p);
            for (std::size_t n = 0; n <= 12; ++n) {
                for (std::size_t k = 0; k <= n; ++k) {
                    CHECK(fnomial(c, n, k) == 1);
                }
            }
        }
    }
}

TEST_CASE("admissibility scan") {
    CHECK(is_admissible(Sequence::fibonacci(), 12).admissible);
    CHECK(is_admissible(Sequence::natural(), 12).admissible);
    CHECK(is_admissible(Sequence::gauss(2), 10).admissible);

    const auto report = is_admissible(Sequence::from_values({Nat(1), Nat(2), Nat(3), Nat(5)}), 3);
    REQUIRE_FALSE(report.admissible);
    REQUIRE(report.first_failure.has_value());
    CHECK(report.first_failure->first == 2);
    CHECK(report.first_failure->second == 1);
}

TEST_CASE("memo table is safe for concurrent readers") {
    const Sequence fib = Sequence::fibonacci();
    const Nat expected = fib.value(200);
    std::vector<std::thread> threads;
    std::vector<Nat> results(8);
    for (std::size_t i = 0; i < results.size(); ++i) {
        threads.emplace_back([&, i] { results[i] = Sequence(fib).value(200); });
    }
    for (auto& t : threads) t.join();
    for (const Nat& r : results) CHECK(r == expected);
}

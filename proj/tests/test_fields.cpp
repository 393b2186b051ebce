#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "caper/fields.hpp"
#include "caper/rational.hpp"
#include "caper/sparse.hpp"

using namespace caper;

TEST_CASE("prime field arithmetic matches modular arithmetic") {
    PrimeField f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.neg(2) == 3);
    PrimeField f7(7);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.mul(3, f7.inv(3)) == 1);
    CHECK_THROWS_AS(f7.inv(0), DivisionByZero);
    CHECK_THROWS_AS(PrimeField(6), BadParameter);
    CHECK_THROWS_AS(PrimeField(1), BadParameter);
}

TEST_CASE("rational field arithmetic is exact") {
    RationalField q;
    CHECK(q.to_string(q.inv(q.parse("2/3"))) == "3/2");
    CHECK(q.to_string(q.add(q.parse("1/3"), q.parse("1/6"))) == "1/2");
    CHECK(q.to_string(q.parse("-0.125")) == "-1/8");
    CHECK_THROWS_AS(q.inv(q.zero()), DivisionByZero);
}

TEST_CASE("field axioms hold exhaustively for small prime orders") {
    auto q = GENERATE(2, 3, 5);
    PrimeField f(static_cast<std::uint64_t>(q));
    for (std::uint64_t a = 0; a < f.order(); ++a) {
        for (std::uint64_t b = 0; b < f.order(); ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(a, f.neg(a)) == 0);
            if (b != 0) CHECK(f.mul(f.mul(a, b), f.inv(b)) == a);
            for (std::uint64_t c = 0; c < f.order(); ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

TEST_CASE("field axioms hold on random rational triples") {
    RationalField f;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
    auto rand_q = [&] { return Rational(num(rng)) / Rational(den(rng)); };
    for (int i = 0; i < 200; ++i) {
        Rational a = rand_q(), b = rand_q(), c = rand_q();
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        CHECK(f.add(a, f.neg(a)) == 0);
        if (!f.is_zero(b)) CHECK(f.mul(f.mul(a, b), f.inv(b)) == a);
    }
}

TEST_CASE("add_scaled produces canonical columns") {
    RationalField q;
    using Col = SparseColumn<Rational>;
    Col u{{0, Rational(1)}};
    Col v{{0, Rational(1)}};
    CHECK(add_scaled(q, u, v, Rational(-1)).empty());
    CHECK(add_scaled(q, Col{}, Col{{3, Rational(2)}}, Rational(1)).size() == 1);
    CHECK(add_scaled(q, Col{}, Col{{3, Rational(2)}}, Rational(1))[0].row == 3);

    PrimeField f3(3);
    SparseColumn<std::uint64_t> a{{1, 2}}, b{{1, 2}};
    // scalar oracle: 2 + 2*2 = 6 = 0 mod 3
    CHECK(f3.add(2, f3.mul(2, 2)) == 0);
    CHECK(add_scaled(f3, a, b, 2).empty());
}

TEST_CASE("add_scaled never stores zeros and keeps rows sorted") {
    PrimeField f5(5);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> rows(0, 15), coeffs(0, 4), len(0, 8);
    for (int trial = 0; trial < 300; ++trial) {
        auto random_col = [&] {
            std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;
            int n = len(rng);
            for (int i = 0; i < n; ++i) entries.emplace_back(rows(rng), coeffs(rng));
            return make_column(f5, entries);
        };
        auto u = random_col(), v = random_col();
        std::uint64_t c = coeffs(rng);
        auto w = add_scaled(f5, u, v, c);
        for (std::size_t i = 0; i < w.size(); ++i) {
            CHECK(w[i].coeff != 0);
            if (i > 0) CHECK(w[i - 1].row < w[i].row);
        }
    }
}

TEST_CASE("low is the largest nonzero row") {
    SparseColumn<std::uint64_t> a{{0, 1}, {4, 2}};
    CHECK(low(a).value() == 4);
    CHECK(!low(SparseColumn<std::uint64_t>{}).has_value());
    SparseColumn<std::uint64_t> c{{7, 3}};
    CHECK(low(c).value() == 7);
}

TEST_CASE("column space rank and membership") {
    PrimeField f2(2);
    ColumnSpace<PrimeField> space(f2);
    CHECK(space.insert({{0, 1}, {1, 1}}));
    CHECK(space.insert({{1, 1}, {2, 1}}));
    CHECK(!space.insert({{0, 1}, {2, 1}}));  // sum of the first two
    CHECK(space.rank() == 2);
    CHECK(space.contains({{0, 1}, {2, 1}}));
    CHECK(!space.contains({{0, 1}}));
}

TEST_CASE("strict bracket") {
    CHECK(strict_bracket(Extended(parse_rational("2.5"))) == 2);
    CHECK(strict_bracket(Extended(3)) == 2);
    CHECK(strict_bracket(Extended(parse_rational("-0.5"))) == -1);
    CHECK(strict_bracket(Extended(parse_rational("-2"))) == -3);
    CHECK_THROWS_AS(strict_bracket(Extended::pos_inf()), Unbounded);
    CHECK_THROWS_AS(strict_bracket(Extended::neg_inf()), Unbounded);
}

TEST_CASE("strict bracket satisfies x - 1 <= [x] < x on random rationals") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<long> num(-2000, 2000), den(1, 60);
    for (int i = 0; i < 1000; ++i) {
        Rational x(num(rng), den(rng));
        BigInt b = strict_bracket(Extended(x));
        CHECK(Rational(b) < x);
        CHECK(x - 1 <= Rational(b));
        if (denominator(x) == 1) CHECK(Rational(b) == x - 1);
    }
}

TEST_CASE("extended values parse and print canonically") {
    CHECK(Extended::parse("inf").is_pos_inf());
    CHECK(Extended::parse("-inf").is_neg_inf());
    CHECK(Extended::parse("2.5").str() == "5/2");
    CHECK(Extended::parse("-3").str() == "-3");
    CHECK(Extended::parse("7/4").str() == "7/4");
    CHECK(Extended::neg_inf() < Extended(parse_rational("-1000000")));
    CHECK(Extended(parse_rational("1000000")) < Extended::pos_inf());
    CHECK_THROWS_AS(Extended::parse("1.2.3"), ParseError);
    CHECK_THROWS_AS(Extended::parse("abc"), ParseError);
    CHECK_THROWS_AS(Extended::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Extended::parse(""), ParseError);
}

TEST_CASE("field spec dispatch") {
    auto order = with_field(FieldSpec::prime(7), [](auto field) { return field.spec().q; });
    CHECK(order == 7);
    auto kind = with_field(FieldSpec::rational(), [](auto field) { return field.spec().kind; });
    CHECK(kind == FieldSpec::Kind::Rational);
    CHECK_THROWS_AS(FieldSpec::prime(9), BadParameter);
}

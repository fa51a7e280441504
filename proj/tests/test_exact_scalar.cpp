#include "doctest.h"

#include <cmath>

#include "contactloc/errors.hpp"
#include "contactloc/exact_scalar.hpp"

using namespace contactloc;

TEST_CASE("scalar construction and homogeneous accessors") {
    ExactScalar zero;
    CHECK(zero.is_zero());
    CHECK(zero.is_homogeneous());
    CHECK(zero.pi_power() == 0);
    CHECK(zero.re() == 0);
    CHECK(zero.im() == 0);

    ExactScalar x(mpq_class(3, 4), mpq_class(-1, 2), 2);
    CHECK(x.is_homogeneous());
    CHECK(x.pi_power() == 2);
    CHECK(x.re() == mpq_class(3, 4));
    CHECK(x.im() == mpq_class(-1, 2));
    CHECK_FALSE(x.is_rational());

    CHECK(ExactScalar(7).is_rational());
    CHECK(ExactScalar(7).rational_value() == 7);
}

TEST_CASE("mixed pi powers form a formal sum") {
    ExactScalar mixed = ExactScalar(1) + ExactScalar::pi_power_of(1);
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK(mixed.parts().size() == 2);
    CHECK_THROWS_AS(mixed.pi_power(), Error);
    CHECK(mixed - ExactScalar::pi_power_of(1) == ExactScalar(1));
}

TEST_CASE("multiplication adds pi powers and follows Gaussian arithmetic") {
    CHECK(ExactScalar::pi_power_of(2) * ExactScalar::pi_power_of(3) ==
          ExactScalar::pi_power_of(5));
    CHECK(ExactScalar::unit_i() * ExactScalar::unit_i() == ExactScalar(-1));

    ExactScalar a(1, 2, 1);   // (1 + 2i) pi
    ExactScalar b(3, -1, -1); // (3 - i) / pi
    ExactScalar product = a * b;
    // (1+2i)(3-i) = 5 + 5i, pi power 0.
    CHECK(product == ExactScalar(5, 5, 0));
}

TEST_CASE("two_pi_power covers negative exponents") {
    CHECK(ExactScalar::two_pi_power(0) == ExactScalar(1));
    CHECK(ExactScalar::two_pi_power(3) == ExactScalar(8, 0, 3));
    CHECK(ExactScalar::two_pi_power(-1) == ExactScalar(mpq_class(1, 2), 0, -1));
    CHECK(ExactScalar::two_pi_power(2) * ExactScalar::two_pi_power(-2) == ExactScalar(1));
}

TEST_CASE("inverse and division require homogeneous nonzero divisors") {
    ExactScalar z(1, 1, 2);  // (1+i) pi^2
    CHECK(z * z.inverse() == ExactScalar(1));
    CHECK(z.inverse() == ExactScalar(mpq_class(1, 2), mpq_class(-1, 2), -2));

    ExactScalar mixed = ExactScalar(1) + ExactScalar::pi_power_of(1);
    CHECK_THROWS_AS(ExactScalar(1) / mixed, Error);
    CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(), Error);
    CHECK((ExactScalar(6, 0, 4) / ExactScalar(3, 0, 1)) == ExactScalar(2, 0, 3));
}

TEST_CASE("pow repeats multiplication") {
    ExactScalar i = ExactScalar::unit_i();
    CHECK(i.pow(0) == ExactScalar(1));
    CHECK(i.pow(2) == ExactScalar(-1));
    CHECK(i.pow(3) == -i);
    CHECK(ExactScalar(2, 0, 1).pow(3) == ExactScalar(8, 0, 3));
}

TEST_CASE("numeric evaluation is the only float path") {
    ExactScalar two_pi_sq(2, 0, 2);
    CHECK(two_pi_sq.to_complex().real() == doctest::Approx(19.739208802178716).epsilon(1e-14));
    CHECK(two_pi_sq.to_complex().imag() == 0.0);
    ExactScalar iv(0, mpq_class(4, 5), 1);
    CHECK(iv.to_complex().imag() == doctest::Approx(4.0 * M_PI / 5.0).epsilon(1e-14));
}

TEST_CASE("text round trip of scalars") {
    const char* samples[] = {"0",       "1",           "-1",          "i",
                             "-i",      "2*pi^2",      "(4/5)*pi",    "(1/3)*pi^2",
                             "2*i",     "(8/5)*i*pi^2", "(1/2+i)*pi^-1", "pi^-2",
                             "(3-2*i)", "1 + 2*pi"};
    for (const char* text : samples) {
        ExactScalar value = ExactScalar::parse(text);
        CHECK(ExactScalar::parse(value.str()) == value);
    }
    CHECK(ExactScalar::parse("2*pi^2").str() == "2*pi^2");
    CHECK(ExactScalar::parse("(4/5)*pi") == ExactScalar(mpq_class(4, 5), 0, 1));
    CHECK(ExactScalar(mpq_class(4, 5), 0, 1).str() == "(4/5)*pi");
    CHECK(ExactScalar(0, mpq_class(8, 5), 2).str() == "(8/5)*i*pi^2");
    CHECK(ExactScalar().str() == "0");
}

TEST_CASE("scalar parse rejects non-constant and malformed input") {
    CHECK_THROWS_AS(ExactScalar::parse("u + 1"), ParseError);
    CHECK_THROWS_AS(ExactScalar::parse("2*"), ParseError);
    CHECK_THROWS_AS(ExactScalar::parse(""), ParseError);
    CHECK_THROWS_AS(ExactScalar::parse("pi^999999999999999999999"), ParseError);
}

TEST_CASE("display sign tracks the lowest grade part") {
    CHECK(ExactScalar(mpq_class(-4, 5), 0, 1).display_sign() == -1);
    CHECK(ExactScalar(0, 2, 0).display_sign() == 1);
    CHECK(ExactScalar().display_sign() == 0);
}

#include "doctest.h"

#include <complex>
#include <map>

#include "contactloc/errors.hpp"
#include "contactloc/poly.hpp"

using namespace contactloc;

namespace {

Poly u() { return Poly::variable("u"); }
Poly s() { return Poly::variable("s"); }

}  // namespace

TEST_CASE("product of conjugate binomials") {
    Poly lhs = (u() + s()) * (u() - s());
    Poly rhs = u() * u() - s() * s();
    CHECK(lhs == rhs);
    CHECK(lhs.total_degree() == 2);
    CHECK(lhs.variables() == std::vector<std::string>{"s", "u"});
}

TEST_CASE("additive identity and zero handling") {
    Poly p = u() * s() + Poly::constant(ExactScalar(3));
    CHECK(p + Poly() == p);
    CHECK((p - p).is_zero());
    CHECK(Poly().total_degree() == Poly::kZeroDegree);
    CHECK(Poly().is_constant());
    CHECK(Poly().as_constant() == ExactScalar());
    CHECK(Poly().str() == "0");
}

TEST_CASE("substitution examples") {
    // u*s with s -> -u gives -u^2.
    Poly p = u() * s();
    CHECK(p.substitute("s", -u()) == -(u() * u()));

    // Substituting a variable by itself is the identity.
    Poly q = u().pow(3) - s() * u() + Poly::constant(ExactScalar(2, 0, 1));
    CHECK(q.substitute("u", u()) == q);
    CHECK(q.substitute("s", s()) == q);

    // Absent variable leaves the polynomial unchanged.
    CHECK(q.substitute("t", Poly::constant(ExactScalar(5))) == q);
}

TEST_CASE("ring ideal generator vanishes under its own root substitution") {
    // Factors (b0*u + w0*s)(b1*u + w1*s) with b = (-1, 1), w = (w, 1).
    // The root of the first factor is s = u/w.
    mpq_class w(3, 2);
    Poly gen = (u() * ExactScalar(-1) + s() * ExactScalar(mpq_class(w))) *
               (u() + s());
    Poly at_root = gen.substitute("s", u() * ExactScalar(mpq_class(1) / w));
    CHECK(at_root.is_zero());

    // With beta = w = (1, 1) every factor is u + s, killed by s -> -u.
    Poly round = (u() + s()) * (u() + s());
    CHECK(round.substitute("s", -u()).is_zero());
}

TEST_CASE("degree, valuation and coefficient extraction") {
    Poly p = u().pow(3) * s() + u() * s() * ExactScalar(2) - s().pow(2) * ExactScalar(0, 1, 0);
    CHECK(p.total_degree() == 4);
    CHECK(p.degree_in("u") == 3);
    CHECK(p.degree_in("s") == 2);
    CHECK(p.degree_in("t") == 0);
    CHECK(p.valuation_in("s") == 1);
    CHECK(p.valuation_in("u") == 0);
    CHECK(p.valuation_in("t") == 0);

    CHECK(p.coefficient_of("u", 3) == s());
    CHECK(p.coefficient_of("u", 1) == s() * ExactScalar(2));
    CHECK(p.coefficient_of("u", 0) == -(s().pow(2) * ExactScalar(0, 1, 0)));
    CHECK(p.coefficient_of("u", 7).is_zero());
    // Asking for power 0 of an absent variable returns the polynomial itself.
    CHECK(p.coefficient_of("t", 0) == p);
    CHECK(p.coefficient_of("t", 1).is_zero());
}

TEST_CASE("valuation of pure monomial factors") {
    Poly m = u().pow(2) * s().pow(3) * ExactScalar(0, mpq_class(7, 5), 1);
    CHECK(m.valuation_in("u") == 2);
    CHECK(m.valuation_in("s") == 3);
    CHECK(m.degree_in("u") == 2);
    CHECK(Poly().valuation_in("u") == 0);
}

TEST_CASE("numeric evaluation matches exact structure") {
    Poly p = u() * u() - s() * s();
    std::map<std::string, std::complex<double>> point{{"u", {2.0, 0.0}}, {"s", {0.5, 0.0}}};
    CHECK(p.eval(point).real() == doctest::Approx(3.75).epsilon(1e-14));
    CHECK(p.eval(point).imag() == doctest::Approx(0.0));
    std::map<std::string, std::complex<double>> missing{{"u", {1.0, 0.0}}};
    CHECK_THROWS_AS(p.eval(missing), Error);
}

TEST_CASE("canonical text order is descending graded lex") {
    Poly p = (u() + s()).pow(2);
    CHECK(p.str() == "s^2 + 2*s*u + u^2");
    Poly q = u() - s() + Poly::constant(ExactScalar(1));
    CHECK(q.str() == "-s + u + 1");
    Poly r = u() * ExactScalar(mpq_class(3, 2), 0, 0) - s() * ExactScalar(0, 1, 2);
    CHECK(r.str() == "(-i*pi^2)*s + (3/2)*u");
}

TEST_CASE("polynomial parse round trips") {
    const char* samples[] = {
        "u^2 - s^2",
        "s^2 + 2*s*u + u^2",
        "(4/5)*pi*u - i*s",
        "u*s*t",
        "-u + 1",
        "(1/2)*u^3 - (2/3)*u*s + pi^2",
    };
    for (const char* text : samples) {
        Poly p = Poly::parse(text);
        CHECK(Poly::parse(p.str()) == p);
    }
    CHECK(Poly::parse("(u+s)*(u-s)") == u() * u() - s() * s());
    CHECK(Poly::parse("u/2") == u() * ExactScalar(mpq_class(1, 2)));
    CHECK(Poly::parse("2^3") == Poly::constant(ExactScalar(8)));
    CHECK(Poly::parse("2^-1") == Poly::constant(ExactScalar(mpq_class(1, 2))));
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(Poly::parse(""), ParseError);
    CHECK_THROWS_AS(Poly::parse("u +"), ParseError);
    CHECK_THROWS_AS(Poly::parse("u ^ s"), ParseError);
    CHECK_THROWS_AS(Poly::parse("(u + s"), ParseError);
    CHECK_THROWS_AS(Poly::parse("u u"), ParseError);   // trailing tokens
    CHECK_THROWS_AS(Poly::parse("u ? s"), ParseError);
    CHECK_THROWS_AS(Poly::parse("1/u"), ParseError);   // non-constant divisor
    CHECK_THROWS_AS(Poly::parse("u^-1"), ParseError);  // negative power of a variable
}

TEST_CASE("reserved names cannot become variables") {
    CHECK_THROWS_AS(Poly::variable("i"), Error);
    CHECK_THROWS_AS(Poly::variable("pi"), Error);
    CHECK_THROWS_AS(Poly::variable(""), Error);
    CHECK_THROWS_AS(Poly::variable("2x"), Error);
    // In parsed text "i" and "pi" are scalars, not variables.
    Poly p = Poly::parse("i*pi*u");
    CHECK(p.variables() == std::vector<std::string>{"u"});
    CHECK(p == u() * ExactScalar(0, 1, 1));
}

TEST_CASE("scalar multiplication and division") {
    Poly p = u() + s();
    CHECK(p * ExactScalar() == Poly());
    CHECK(p * ExactScalar(2) / ExactScalar(2) == p);
    Poly scaled = p * ExactScalar(0, 1, 1);
    CHECK(scaled.terms().begin()->second == ExactScalar(0, 1, 1));
}

TEST_CASE("add_term merges and cancels") {
    Poly p = u() * s();
    Poly q = -(u() * s());
    CHECK((p + q).is_zero());
    CHECK((p + q).variables().empty());
}

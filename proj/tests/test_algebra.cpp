#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "ezd/algebra.hpp"
#include "ezd/error.hpp"
#include "ezd/fixtures.hpp"
#include "helpers.hpp"

using namespace ezd;

TEST_SUITE_BEGIN("algebra");

namespace {
const FieldSpec kQ = FieldSpec::rationals();
}

TEST_CASE("hilbert functions of monomial quotients match divisibility counting") {
  for (const AlgebraSpec& spec :
       {example_x4(kQ), example_x3y2(kQ), example_e3gor(kQ), example_may4(kQ)}) {
    GradedAlgebra a = build_algebra(spec);
    CHECK(a.hilbert().values == tst::monomial_quotient_hf(spec));
  }
}

TEST_CASE("powers of one variable") {
  GradedAlgebra a = build_algebra(example_x4(kQ));
  CHECK(a.hilbert().values == std::vector<long>{1, 1, 1, 1});
  CHECK(a.top_degree() == 3);
  CHECK(a.hilbert().total() == 4);
  CHECK(a.hilbert().str() == "1,1,1,1");
  CHECK(a.min_gen_degrees() == std::map<int, long>{{4, 1}});

  SocleReport s = socle(a);
  CHECK(s.type == 1);
  CHECK(s.gorenstein);
  CHECK(s.level);
  CHECK(s.level_degree == 3);
  CHECK(s.dims == std::vector<long>{0, 0, 0, 1});

  Poly x = Poly::variable(a.vars(), kQ, 0);
  CHECK(a.is_zero_in_quotient(x.pow(4)));
  CHECK_FALSE(a.is_zero_in_quotient(x.pow(3)));
  CHECK(a.normal_form(x.pow(5)).empty());
  CHECK(a.std_monomials(2).size() == 1);
}

TEST_CASE("three squared variables") {
  GradedAlgebra a = build_algebra(example_e3gor(kQ));
  CHECK(a.hilbert().values == std::vector<long>{1, 3, 3, 1});
  CHECK(a.min_gen_degrees() == std::map<int, long>{{2, 3}});
  CHECK(socle(a).gorenstein);

  Poly s = tst::pp("x+y+z", a.vars(), kQ);
  CHECK(a.normal_form_poly(s * s) == tst::pp("2*x*y+2*x*z+2*y*z", a.vars(), kQ));
  CHECK(a.normal_form_poly(s.pow(3)) == tst::pp("6*x*y*z", a.vars(), kQ));
  CHECK(a.is_zero_in_quotient(s.pow(4)));
}

TEST_CASE("two mixed powers") {
  GradedAlgebra a = build_algebra(example_x3y2(kQ));
  CHECK(a.hilbert().values == std::vector<long>{1, 2, 2, 1});
  CHECK(a.min_gen_degrees() == std::map<int, long>{{2, 1}, {3, 1}});
  SocleReport s = socle(a);
  CHECK(s.gorenstein);
  CHECK(s.level_degree == 3);
}

TEST_CASE("the five-variable example") {
  GradedAlgebra a = build_algebra(example_may4(kQ));
  CHECK(a.hilbert().values ==
        std::vector<long>{1, 5, 11, 21, 29, 28, 22, 12, 3});
  CHECK(a.min_gen_degrees() == std::map<int, long>{{2, 4}, {4, 7}});
  SocleReport s = socle(a);
  CHECK(s.type == 4);
  CHECK_FALSE(s.level);
  CHECK_FALSE(s.gorenstein);
  CHECK(s.level_degree == 8);

  // the monomial ideal does not care about the coefficient field
  GradedAlgebra a2 = build_algebra(example_may4(FieldSpec::prime(32003)));
  CHECK(a2.hilbert().values == a.hilbert().values);
  CHECK(a2.min_gen_degrees() == a.min_gen_degrees());
}

TEST_CASE("normal forms are linear and idempotent") {
  GradedAlgebra a = build_algebra(example_e3gor(kQ));
  Poly f = tst::pp("x*y+2*y*z", a.vars(), kQ);
  Poly g = tst::pp("x^2-3*x*z", a.vars(), kQ);
  Poly nf = a.normal_form_poly(f);
  Poly ng = a.normal_form_poly(g);
  CHECK(a.normal_form_poly(f + g) == nf + ng);
  CHECK(a.normal_form_poly(nf) == nf);
  CHECK(a.normal_form_poly(Poly(a.vars(), kQ)).is_zero());
  CHECK_THROWS_AS(a.normal_form(tst::pp("x^2+y", a.vars(), kQ)), InputError);
}

TEST_CASE("builder rejects bad generators") {
  VarSet v = tst::vars({"x", "y"});
  auto spec_with = [&](const std::string& gen) {
    AlgebraSpec s;
    s.vars = v;
    s.field = kQ;
    s.gens = {tst::pp(gen, v, kQ), tst::pp("x^3", v, kQ), tst::pp("y^3", v, kQ)};
    return s;
  };
  CHECK_THROWS_AS(build_algebra(spec_with("x+y")), InputError);
  CHECK_THROWS_AS(build_algebra(spec_with("x^2+y")), InputError);
  CHECK_THROWS_AS(build_algebra(spec_with("3")), InputError);

  AlgebraSpec bound;
  bound.vars = v;
  bound.field = kQ;
  bound.gens = {tst::pp("x^2", v, kQ)};
  bound.max_degree_bound = 8;
  CHECK_THROWS_AS(build_algebra(bound), BoundError);
}

TEST_CASE("multiplication maps compose") {
  GradedAlgebra a = build_algebra(example_e3gor(kQ));
  Poly x = Poly::variable(a.vars(), kQ, 0);
  Poly y = Poly::variable(a.vars(), kQ, 1);
  GradedMap mx = multiplication_map(a, x);
  GradedMap my = multiplication_map(a, y);
  GradedMap mxy = multiplication_map(a, x * y);
  CHECK(mxy.degree == 2);
  for (int d = 0; d + 2 <= a.top_degree(); ++d) {
    CHECK(mxy.at(d) == my.at(d + 1) * mx.at(d));
    CHECK(mxy.at(d) == mx.at(d + 1) * my.at(d));
  }
  CHECK_THROWS_AS(multiplication_map(a, tst::pp("x^2", a.vars(), kQ)),
                  InputError);
  CHECK_THROWS_AS(multiplication_map(a, tst::pp("x+x^2", a.vars(), kQ)),
                  InputError);
}

TEST_CASE("linear reduction substitutes a variable away") {
  VarSet v = tst::vars({"x", "y", "u"});
  AlgebraSpec s;
  s.vars = v;
  s.field = kQ;
  s.gens = {tst::pp("x^3", v, kQ), tst::pp("y^3", v, kQ), tst::pp("u^2", v, kQ)};
  AlgebraSpec r = reduce_linear(s, {tst::pp("u-x", v, kQ)});
  CHECK(r.vars.size() == 2);
  GradedAlgebra a = build_algebra(r);
  CHECK(a.hilbert().values == std::vector<long>{1, 2, 2, 1});

  CHECK_THROWS_AS(reduce_linear(s, {tst::pp("u^2", v, kQ)}), InputError);
  CHECK_THROWS_AS(
      reduce_linear(s, {tst::pp("x-y", v, kQ), tst::pp("2*x-2*y", v, kQ)}),
      InputError);
}

TEST_CASE("random reductions are reproducible from their seed") {
  AlgebraSpec cube = example_segre_cube(FieldSpec::prime(32003));
  ReductionResult r1 = random_artinian_reduction(cube, 4, 99);
  ReductionResult r2 = random_artinian_reduction(cube, 4, 99);
  CHECK(r1.seed == 99);
  REQUIRE(r1.forms.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(r1.forms[i] == r2.forms[i]);
  CHECK(r1.algebra.hilbert().values == std::vector<long>{1, 4, 1});
  CHECK(r2.algebra.hilbert().values == std::vector<long>{1, 4, 1});
}

TEST_CASE("algebra descriptions read back from text") {
  AlgebraFile f = read_algebra_file(
      "# comment\nfield Q\nvars x y z\nmaxdeg 30\ngen x^2\ngen y^2\ngen "
      "z^2\nreduce x-y\n");
  CHECK(f.spec.field == kQ);
  CHECK(f.spec.vars.names() == std::vector<std::string>{"x", "y", "z"});
  CHECK(f.spec.gens.size() == 3);
  CHECK(f.spec.max_degree_bound == 30);
  REQUIRE(f.reduce_forms.size() == 1);
  CHECK(f.reduce_forms[0] == tst::pp("x-y", f.spec.vars, kQ));

  AlgebraFile p = read_algebra_file("field F 32003\nvars t\ngen t^2\n");
  CHECK(p.spec.field == FieldSpec::prime(32003));

  CHECK_THROWS_AS(read_algebra_file("vars x\ngen x^2\n"), InputError);
  CHECK_THROWS_AS(read_algebra_file("field Q\nfield Q\nvars x\ngen x^2\n"),
                  InputError);
  CHECK_THROWS_AS(read_algebra_file("field Q\nvars x\nbogus 3\n"), InputError);
  CHECK_THROWS_AS(read_algebra_file("field F 4\nvars x\ngen x^2\n"),
                  InputError);
  try {
    read_algebra_file("field Q\nvars x\ngen x^2+\n");
    FAIL("malformed generator accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_SUITE_END();

#include <doctest.h>

#include "exlsa/errors.hpp"
#include "exlsa/report.hpp"
#include "support.hpp"

using namespace exlsa;
using namespace testing;

TEST_CASE("options") {
  CHECK(Options{}.alpha_value() == al);
  CHECK(Options{}.beta_value() == Scalar(-1) - al);
  const auto o = Options::at("l1=2,l3=-1/2");
  REQUIRE(o.lambdas.has_value());
  CHECK((*o.lambdas)[0] == Scalar(2));
  CHECK((*o.lambdas)[1] == l2);
  CHECK((*o.lambdas)[2] == Scalar(-1, 2));
  CHECK_THROWS_AS(Options::at("l4=1"), ParseError);
  CHECK_THROWS_AS(Options::at("a=1"), ParseError);
  CHECK_THROWS_AS(Options::at("l1"), ParseError);
  CHECK_THROWS_AS(Options::parse_parameter("l1"), ParseError);
  CHECK_FALSE(Options::parse_parameter("symbolic").has_value());
  CHECK(*Options::parse_parameter("-1/2") == Scalar(-1, 2));
}

TEST_CASE("unknown suite and target") {
  Context ctx{Options::compact()};
  CHECK_THROWS_AS(run_suite("g7", ctx), UnknownSuite);
  CHECK_THROWS_AS(decompose("psi", ctx), UnknownSuite);
  CHECK(suite_names().back() == "all");
}

TEST_CASE("reports are deterministic and complete") {
  Context a{Options{}}, b{Options{}};
  const auto ra = run_suite("decompositions", a), rb = run_suite("decompositions", b);
  CHECK(render_text(ra) == render_text(rb));
  CHECK(render_json(ra) == render_json(rb));
  CHECK(ra.ok());
  CHECK(ra.checks.size() == 6);
  CHECK(render_json(ra).find("\"elapsed\"") == std::string::npos);
  Options t;
  t.timing = true;
  Context c{t};
  CHECK(run_suite("decompositions", c).checks[0].elapsed.has_value());
}

TEST_CASE("decomposition rows carry incidences") {
  Context ctx{Options{}};
  const auto phi = decompose("phi", ctx);
  REQUIRE(phi.size() == 7);
  CHECK(phi[0].label == "e_{123}");
  CHECK(phi[0].annotation == "Fano line {1,2,3}");
  const auto qi = decompose("q-im", ctx);
  CHECK(qi[0].annotation == "complement of Fano line {3,5,6}");
  const auto qo = decompose("q-oct", ctx);
  REQUIRE(qo.size() == 14);
  for (const auto &r : qo)
    CHECK(r.annotation.starts_with("affine plane"));
  CHECK(render_decomposition("q-oct", qo).starts_with("eta^-1(q-oct): 14 terms"));
}

TEST_CASE("specialized parameters") {
  Context split{Options::split()};
  CHECK(run_suite("g2", split).ok());
  Context at{Options::at("l1=2,l2=3,l3=5")};
  const auto r = run_suite("decompositions", at);
  CHECK(r.ok());
}

TEST_CASE("d21 suite tracks alpha and beta") {
  Options half;
  half.alpha = Scalar(-1, 2);
  Context h{half};
  const auto r = run_suite("d21", h);
  CHECK(r.ok());
  REQUIRE(r.find("d21.vanish") != nullptr);
  CHECK(r.find("d21.vanish")->status == Verdict::pass);

  Options bad;
  bad.alpha = Scalar(1);
  bad.beta = Scalar(1);
  Context b{bad};
  const auto rb = run_suite("d21", b);
  CHECK_FALSE(rb.ok());
  CHECK(rb.find("d21.special")->status == Verdict::fail);
  CHECK(rb.find("d21.special")->detail.starts_with("witness"));
  CHECK(rb.find("d21.tilde.jacobi")->detail.starts_with("OOO"));
  CHECK(rb.find("d21.psi") == nullptr);
}

TEST_CASE("Hodge table") {
  Context ctx{Options{}};
  const auto rows = hodge_report(ctx);
  REQUIRE(rows.size() == 10);
  for (const auto &r : rows) {
    CHECK(r.property_holds);
    REQUIRE(r.computed.has_value());
    CHECK_FALSE(r.computed->is_zero());
  }
  // the octonion constants
  CHECK(*rows[2].computed == Scalar(-56));
  CHECK(*rows[3].computed == Scalar(112, 3));
  CHECK(*rows[4].computed == Scalar(-56));
  CHECK(*rows[5].computed == Scalar(-56, 3));
  // the cross product constants under the shuffle normalization
  CHECK(*rows[0].computed == Scalar(7));
  CHECK(*rows[1].computed == Scalar(-14, 3));
  CHECK(render_hodge(rows).find("no published value") != std::string::npos);
}

TEST_CASE("Lie algebras export as even superalgebras") {
  Context ctx{Options::compact()};
  const auto s = lie_algebra_of(ctx.g2().rep);
  CHECK(s.even_dim == 14);
  CHECK(s.odd_dim == 0);
  CHECK(super_jacobi_check(s).holds);
  CHECK(form_invariance_check(s).holds);
  CHECK(parse_json(export_json(s)).brackets == s.brackets);
}

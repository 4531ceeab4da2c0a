#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mpga/measures.hpp"
#include "mpga/multivector.hpp"
#include "oracles.hpp"

using namespace mpga;

namespace {

const Signature& m2 = Signature::m2();
const Signature& m3 = Signature::m3();
const Signature& m4 = Signature::m4();

Multivector blade2(const Signature& sig, std::initializer_list<int> idx,
                   double c = 1.0) {
  return Multivector::blade(sig, idx, c);
}

bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("geometric product on basis vectors") {
  auto e0 = blade2(m2, {0});
  auto e1 = blade2(m2, {1});
  CHECK(scalar_part(e1 * e1) == 1.0);
  CHECK((e0 * e0).is_zero());
  auto e20 = blade2(m2, {2, 0});
  CHECK((e20 * e20).is_zero());  // degenerate-nilpotent
  // cross-check against the permutation oracle
  CHECK(approx_equal(e20 * e20, oracle::product(e20, e20)));
}

TEST_CASE("product oracle equivalence, exhaustive blade pairs") {
  for (const Signature* sig : {&m2, &m3, &m4}) {
    for (int i = 0; i < sig->mv_size(); ++i) {
      for (int j = 0; j < sig->mv_size(); ++j) {
        auto a = Multivector::blade(*sig, static_cast<BladeMask>(i));
        auto b = Multivector::blade(*sig, static_cast<BladeMask>(j));
        CHECK(approx_equal(a * b, oracle::product(a, b)));
      }
    }
  }
}

TEST_CASE("wedge basics") {
  auto e1 = blade2(m2, {1});
  auto e2 = blade2(m2, {2});
  CHECK(approx_equal(wedge(e1, e2), blade2(m2, {1, 2})));

  auto e0 = blade2(m2, {0});
  auto a = e0 * 0.3 + e1 * 2.0 + e2 * 5.0;
  // e0 ^ (d e0 + a e1 + h e2) = -h e20 + a e01
  auto expected = blade2(m2, {2, 0}, -5.0) + blade2(m2, {0, 1}, 2.0);
  CHECK(approx_equal(wedge(e0, a), expected));

  auto gen = oracle::rng();
  for (int k = 0; k < 50; ++k) {
    auto v = oracle::random_grade(m3, 1, gen);
    CHECK(approx_zero(wedge(v, v), v.coeff_norm() * v.coeff_norm()));
  }
}

TEST_CASE("inner product on the worked line pair") {
  const double s5 = std::sqrt(5.0), s3 = std::sqrt(3.0);
  auto a = blade2(m2, {0}, 1 / s5) + blade2(m2, {1}, 3 / s5) +
           blade2(m2, {2}, -2 / s5);
  auto b = blade2(m2, {0}, -2 / s3) + blade2(m2, {1}, 2 / s3) +
           blade2(m2, {2}, 1 / s3);
  const double cosh_ab = scalar_part(inner(a, b));
  const double phi = std::acosh(cosh_ab);
  CHECK(close(std::tanh(phi), 7.0 / 8.0));
  CHECK(std::abs(phi - 1.35) < 0.01);
  // ab = cosh + P sinh splits under grade selection
  CHECK(close(scalar_part(grade_select(a * b, 0)), cosh_ab));
}

TEST_CASE("inner product of a worldline with e12 is -cosh(phi)") {
  const double alpha = 0.8, phi = 1.1;
  auto lam = blade2(m3, {2, 3}, std::cos(alpha) * std::sinh(phi)) +
             blade2(m3, {3, 1}, std::sin(alpha) * std::sinh(phi)) +
             blade2(m3, {1, 2}, std::cosh(phi));
  CHECK(close(scalar_part(inner(lam, blade2(m3, {1, 2}))), -std::cosh(phi)));
}

TEST_CASE("inner rejects mixed-grade operands") {
  auto mixed = Multivector::scalar(m2, 1.0) + blade2(m2, {1});
  CHECK_THROWS_AS((void)inner(mixed, blade2(m2, {1})), Error);
}

TEST_CASE("commutator") {
  auto gen = oracle::rng();
  for (int k = 0; k < 20; ++k) {
    auto a = oracle::random_mv(m3, gen);
    auto b = oracle::random_mv(m3, gen);
    CHECK(approx_zero(commutator(a, a), a.coeff_norm()));
    CHECK(approx_equal(commutator(a, b), -commutator(b, a)));
  }

  // P x Q for normalized M2 points: a point at infinity perpendicular to
  // P v Q (it matches the polar of the join up to scale).
  auto p = make_point(Space::M2, {1, 0.3, -1.2}).mv();
  auto q = make_point(Space::M2, {1, 2.0, 0.7}).mv();
  auto comm = commutator(p, q);
  CHECK(approx_equal(comm,
                     (oracle::product(p, q) - oracle::product(q, p)) * 0.5,
                     Tolerance{1e-12, 1e-12}));
  CHECK(approx_zero(finite_part(comm), comm.coeff_norm()));
  auto pol = polar(regressive_join(p, q));
  const double cross = comm.coeff_norm() * pol.coeff_norm();
  CHECK(close(std::abs(comm.coeffs().dot(pol.coeffs())), cross, 1e-9));

  auto l = blade2(m3, {3, 1});
  CHECK(approx_zero(commutator(l, l), 1.0));
}

TEST_CASE("reverse, polar, grade selection") {
  CHECK(approx_equal(reverse(blade2(m2, {1, 2})), blade2(m2, {1, 2}, -1.0)));
  auto gen = oracle::rng();
  for (const Signature* sig : {&m2, &m3, &m4}) {
    for (int k = 0; k < 10; ++k) {
      auto a = oracle::random_mv(*sig, gen);
      auto b = oracle::random_mv(*sig, gen);
      CHECK(approx_equal(reverse(a * b), reverse(b) * reverse(a)));
    }
  }
  // polar of a proper M2 line is a point at infinity
  auto a = blade2(m2, {0}, 0.4) + blade2(m2, {1}, 1.5) + blade2(m2, {2}, 0.9);
  auto pol = polar(a);
  CHECK(homogeneous_grade(pol) == 2);
  CHECK(approx_zero(finite_part(pol), pol.coeff_norm()));
}

TEST_CASE("wedge and inner are grade parts of the geometric product") {
  auto gen = oracle::rng();
  for (const Signature* sig : {&m2, &m3, &m4}) {
    for (int r = 0; r <= sig->dim_total(); ++r) {
      for (int s = 0; s <= sig->dim_total(); ++s) {
        auto a = oracle::random_grade(*sig, r, gen);
        auto b = oracle::random_grade(*sig, s, gen);
        CHECK(approx_equal(wedge(a, b), grade_select(a * b, r + s)));
        CHECK(approx_equal(inner(a, b), grade_select(a * b, std::abs(r - s))));
      }
    }
  }
}

TEST_CASE("associativity on random multivectors") {
  auto gen = oracle::rng();
  for (const Signature* sig : {&m2, &m3, &m4}) {
    for (int k = 0; k < 30; ++k) {
      auto a = oracle::random_mv(*sig, gen);
      auto b = oracle::random_mv(*sig, gen);
      auto c = oracle::random_mv(*sig, gen);
      CHECK(approx_equal((a * b) * c, a * (b * c), Tolerance{1e-12, 1e-12}));
    }
  }
}

TEST_CASE("regressive join against the determinant oracle") {
  // line through two points, checked for incidence and against the
  // homogeneous cross-product form
  auto p = make_point(Space::M2, {1, 1, 0}).mv();
  auto q = make_point(Space::M2, {1, 0, 1}).mv();
  auto line = regressive_join(p, q);
  CHECK(homogeneous_grade(line) == 1);
  CHECK(approx_zero(wedge(line, p), 1.0));
  CHECK(approx_zero(wedge(line, q), 1.0));

  const double w1 = 1, x1 = 1, t1 = 0, w2 = 1, x2 = 0, t2 = 1;
  const double d = x1 * t2 - t1 * x2;
  const double a = t1 * w2 - w1 * t2;
  const double h = w1 * x2 - x1 * w2;
  auto expected = blade2(m2, {0}, d) + blade2(m2, {1}, a) + blade2(m2, {2}, h);
  const double dot = line.coeffs().dot(expected.coeffs());
  CHECK(close(std::abs(dot), line.coeff_norm() * expected.coeff_norm(), 1e-9));

  CHECK(regressive_join(p, p).is_zero());

  // join of 4 points spanning the unit coordinate simplex in M3
  auto s0 = make_point(Space::M3, {1, 0, 0, 0}).mv();
  auto s1 = make_point(Space::M3, {1, 1, 0, 0}).mv();
  auto s2 = make_point(Space::M3, {1, 0, 1, 0}).mv();
  auto s3 = make_point(Space::M3, {1, 0, 0, 1}).mv();
  auto joined = regressive_join(
      regressive_join(regressive_join(s0, s1), s2), s3);
  CHECK(homogeneous_grade(joined) == 0);
  CHECK(close(std::abs(scalar_part(joined)), 1.0));

  // random 4-point joins match the 4x4 determinant up to sign
  auto gen = oracle::rng();
  for (int k = 0; k < 30; ++k) {
    double coords[4][4];
    std::vector<Multivector> pts;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) coords[i][j] = oracle::uniform(gen);
      pts.push_back(make_point(Space::M3, {coords[i][0], coords[i][1],
                                           coords[i][2], coords[i][3]})
                        .mv());
    }
    auto j4 = regressive_join(
        regressive_join(regressive_join(pts[0], pts[1]), pts[2]), pts[3]);
    CHECK(close(std::abs(scalar_part(j4)), std::abs(oracle::det4(coords)),
                1e-9));
  }
}

TEST_CASE("join is metric independent") {
  auto gen = oracle::rng();
  const Signature* pairs[3][2] = {
      {&m2, &Signature::euclidean_oracle(3)},
      {&m3, &Signature::euclidean_oracle(4)},
      {&m4, &Signature::euclidean_oracle(5)},
  };
  for (auto& pair : pairs) {
    for (int k = 0; k < 20; ++k) {
      auto a = oracle::random_mv(*pair[0], gen);
      auto b = oracle::random_mv(*pair[0], gen);
      auto am = Multivector(*pair[1], a.coeffs());
      auto bm = Multivector(*pair[1], b.coeffs());
      auto jm = regressive_join(a, b);
      auto je = regressive_join(am, bm);
      CHECK((jm.coeffs() - je.coeffs()).norm() <=
            1e-12 * std::max(1.0, jm.coeffs().norm()));
    }
  }
}

TEST_CASE("norms") {
  auto a = blade2(m2, {0}, 0.7) + blade2(m2, {1}, 2.0) + blade2(m2, {2}, 1.2);
  CHECK(close(norm(a), std::sqrt(std::abs(2.0 * 2.0 - 1.2 * 1.2))));

  auto p = make_point(Space::M2, {1, 0.4, -2.0}).mv();
  CHECK(close(norm(p), 1.0));

  auto l4 = make_line(Space::M4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 1}).mv();
  CHECK(close(norm(l4), 1.0));

  // zero norm for objects at infinity
  CHECK(norm(blade2(m3, {0})) == 0.0);
  CHECK(norm(blade2(m3, {1, 0})) == 0.0);
}

TEST_CASE("finite coefficients are enforced") {
  Multivector::Coeffs c = Multivector::Coeffs::Zero(8);
  c[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Multivector(m2, std::move(c)), Error);
}

TEST_CASE("signature mismatch is a usage error") {
  CHECK_THROWS_AS((void)(blade2(m2, {1}) * blade2(m3, {1})), Error);
}

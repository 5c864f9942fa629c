#include <doctest.h>

#include <algorithm>
#include <vector>

#include "crn/fixtures.hpp"
#include "crn/linalg.hpp"
#include "crn/network.hpp"
#include "crn/phospho.hpp"
#include "crn/toric.hpp"
#include "oracles.hpp"

using namespace crn;

namespace {

RateAssignment triangle_rates(oracle::Rng& rng, bool symmetric) {
  RateAssignment r;
  for (const char* name : {"k12", "k21", "k13", "k31", "k23", "k32"}) r[name] = rng.positive();
  if (symmetric)
    r["k32"] = r["k31"];
  else if (r["k32"] == r["k31"])
    r["k32"] += 1;
  return r;
}

RateAssignment random_rates(const ReactionNetwork& net, oracle::Rng& rng) {
  RateAssignment out;
  for (const auto& r : net.reactions) out[r.rate] = rng.positive();
  return out;
}

// v ~ w up to a positive scalar
bool proportional(const std::vector<Rat>& v, const std::vector<Rat>& w) {
  if (v.size() != w.size()) return false;
  Rat num(0), den(0);
  for (size_t i = 0; i < v.size(); ++i) {
    if ((v[i] == 0) != (w[i] == 0)) return false;
    if (v[i] != 0 && num == 0) {
      num = v[i];
      den = w[i];
    }
  }
  if (den == 0) return true;  // both zero vectors
  if (sign_of(num) != sign_of(den)) return false;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] * den != w[i] * num) return false;
  return true;
}

// covector of a binomial in monomial space: c1 at the far index, -c2 at the anchor
RatMat binomial_covectors(const std::vector<Binomial>& gens, int m) {
  RatMat rows(static_cast<int>(gens.size()), m);
  for (size_t p = 0; p < gens.size(); ++p) {
    rows(static_cast<int>(p), gens[p].i2) = gens[p].c1;
    rows(static_cast<int>(p), gens[p].i1) = -gens[p].c2;
  }
  return rows;
}

RatMat stack(const RatMat& a, const RatMat& b) {
  RatMat out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
  return out;
}

std::vector<Enlargement> yp_multipliers() {
  std::vector<Int> alpha(9, 0);
  alpha[6] = 1;  // Yp
  return {{alpha, 0}, {alpha, 2}, {alpha, 7}, {alpha, 8}};
}

}  // namespace

TEST_CASE("triangle kernel splits into blocks exactly when the third column vanishes") {
  oracle::Rng rng(401);
  for (int trial = 0; trial < 10; ++trial) {
    auto rates = triangle_rates(rng, true);
    auto mats = build_matrices(fixtures::triangle(), rates);
    auto out = find_certificate(mats.Sigma, mats.Y);
    REQUIRE(out.cert.has_value());
    CHECK(out.cert->blocks == std::vector<std::vector<int>>{{0, 1}, {2}});
    std::vector<Rat> expect = {Rat(2) * rates["k21"] + rates["k23"],
                               Rat(2) * rates["k12"] + rates["k13"], Rat(0)};
    CHECK(proportional(out.cert->basis[0], expect));
    CHECK(proportional(out.cert->basis[1], {Rat(0), Rat(0), Rat(1)}));
  }
  for (int trial = 0; trial < 10; ++trial) {
    auto rates = triangle_rates(rng, false);
    auto mats = build_matrices(fixtures::triangle(), rates);
    auto out = find_certificate(mats.Sigma, mats.Y);
    REQUIRE(out.failure.has_value());
    CHECK(out.failure->kind == CertFailure::Kind::block_dimension);
    CHECK(out.failure->block_dim == 0);
  }
}

TEST_CASE("certificates satisfy all structural invariants") {
  oracle::Rng rng(402);
  auto check_cert = [](const RatMat& sigma, const ToricCertificate& cert) {
    int m = sigma.cols();
    std::vector<int> seen(m, 0);
    for (size_t j = 0; j < cert.blocks.size(); ++j) {
      CHECK(!cert.blocks[j].empty());
      for (int i : cert.blocks[j]) seen[i]++;
      // support matches the block exactly
      for (int i = 0; i < m; ++i) {
        bool in_block = std::find(cert.blocks[j].begin(), cert.blocks[j].end(), i) !=
                        cert.blocks[j].end();
        CHECK((cert.basis[j][i] != 0) == in_block);
      }
      auto prod = sigma * cert.basis[j];
      for (const Rat& v : prod) CHECK(v == 0);
    }
    for (int i = 0; i < m; ++i) CHECK(seen[i] == 1);
    CHECK(static_cast<int>(cert.blocks.size()) == cert.dim_kernel);
    CHECK(cert.dim_kernel == m - rref(sigma).rank);
  };
  {
    auto rates = triangle_rates(rng, true);
    auto mats = build_matrices(fixtures::triangle(), rates);
    auto out = find_certificate(mats.Sigma, mats.Y);
    check_cert(mats.Sigma, out.cert.value());
  }
  for (int n : {1, 2, 3}) {
    RateAssignment rates;
    for (const auto& name : phospho_rate_names(n)) rates[name] = rng.positive();
    auto sys = phospho_system(n, rates);
    auto out = find_certificate(sys.mats.Sigma, sys.mats.Y);
    check_cert(sys.mats.Sigma, out.cert.value());
  }
}

TEST_CASE("kernel vanishing on a coordinate is reported as a witness") {
  RatMat sigma(2, 2);
  sigma(0, 0) = 1;
  IntMat exps(2, 1);
  exps(0, 0) = 1;
  exps(1, 0) = 2;
  auto out = find_certificate(sigma, exps);
  REQUIRE(out.failure.has_value());
  CHECK(out.failure->kind == CertFailure::Kind::zero_coordinate);
  CHECK(out.failure->coordinate == 0);
}

TEST_CASE("signaling network has no certificate at any probed rates") {
  oracle::Rng rng(403);
  auto net = fixtures::envz_ompr();
  for (int trial = 0; trial < 5; ++trial) {
    auto mats = build_matrices(net, random_rates(net, rng));
    auto out = find_certificate(mats.Sigma, mats.Y);
    CHECK(out.failure.has_value());
  }
}

TEST_CASE("mixed-sign kernel vector fails the sign condition") {
  RatMat sigma(1, 2);
  sigma(0, 0) = 1;
  sigma(0, 1) = 1;
  IntMat exps(2, 1);
  exps(0, 0) = 1;
  exps(1, 0) = 2;
  auto out = find_certificate(sigma, exps);
  REQUIRE(out.cert.has_value());
  CHECK(!check_condition2(*out.cert));
  CHECK(!check_condition2_determinant(*out.cert, sigma));
  auto gens = binomial_generators(*out.cert);
  REQUIRE(gens.size() == 1);
  CHECK(sign_of(gens[0].c1) != sign_of(gens[0].c2));
  CHECK_THROWS_AS(build_condition3(*out.cert), std::invalid_argument);
}

TEST_CASE("all-zero coefficient matrix has singleton blocks and a trivial parametrization") {
  RatMat sigma(1, 2);
  IntMat exps(2, 2);
  exps(0, 0) = 2;
  exps(1, 1) = 1;
  auto out = find_certificate(sigma, exps);
  REQUIRE(out.cert.has_value());
  CHECK(out.cert->blocks == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(binomial_generators(*out.cert).empty());
  auto c3 = build_condition3(*out.cert);
  CHECK(c3.delta.cols() == 0);
  CHECK(check_condition3(c3));
  auto par = build_parametrization(*out.cert, c3);
  CHECK(par.exact);
  CHECK(par.x_exact == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(par.A.rows() == 2);
}

TEST_CASE("sign condition agrees with the alternating-minor test on random draws") {
  oracle::Rng rng(404);
  auto run = [&](const RatMat& sigma, const IntMat& y) {
    auto out = find_certificate(sigma, y);
    if (!out.cert) return;
    CHECK(check_condition2(*out.cert) == check_condition2_determinant(*out.cert, sigma));
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto mats = build_matrices(fixtures::triangle(), triangle_rates(rng, true));
    run(mats.Sigma, mats.Y);
  }
  for (int n : {1, 2}) {
    for (int trial = 0; trial < 50; ++trial) {
      RateAssignment rates;
      for (const auto& name : phospho_rate_names(n)) rates[name] = rng.positive();
      auto sys = phospho_system(n, rates);
      run(sys.mats.Sigma, sys.mats.Y);
    }
  }
}

TEST_CASE("triangle binomial, difference column, and ratio in closed form") {
  oracle::Rng rng(405);
  auto rates = triangle_rates(rng, true);
  auto mats = build_matrices(fixtures::triangle(), rates);
  auto an = toric_analyze(mats);
  REQUIRE(an.cond1);
  CHECK(an.cond2);
  CHECK(an.cond3);
  REQUIRE(an.binomials.size() == 1);
  const Binomial& b = an.binomials[0];
  CHECK(b.i1 == 0);
  CHECK(b.i2 == 1);
  CHECK(b.e1 == std::vector<Int>{0, 2});
  CHECK(b.e2 == std::vector<Int>{2, 0});
  // coefficient ratio (2k21+k23)/(2k12+k13)
  Rat lhs = Rat(2) * rates["k21"] + rates["k23"];
  Rat rhs = Rat(2) * rates["k12"] + rates["k13"];
  CHECK(b.c1 * rhs == b.c2 * lhs);
  const auto& c3 = *an.cond3_data;
  REQUIRE(c3.delta.cols() == 1);
  CHECK(c3.delta(0, 0) == 2);
  CHECK(c3.delta(1, 0) == -2);
  CHECK(c3.theta[0] == lhs / rhs);
  CHECK(c3.relations.cols() == 0);
}

TEST_CASE("triangle parametrization at unit rates is the diagonal") {
  auto net = fixtures::triangle();
  auto an = toric_analyze(build_matrices(net, fixtures::unit_rates(net)));
  REQUIRE(an.par.has_value());
  const auto& par = *an.par;
  CHECK(par.exact);
  CHECK(par.x_exact == std::vector<Rat>{Rat(1), Rat(1)});
  REQUIRE(par.A.rows() == 1);
  CHECK(par.A(0, 0) == 1);
  CHECK(par.A(0, 1) == 1);
  auto x = eval_parametrization(par, {Rat(7, 3)});
  CHECK(x == std::vector<Rat>{Rat(7, 3), Rat(7, 3)});
}

TEST_CASE("two-site pipeline: difference matrix, ratios, exponent rows") {
  oracle::Rng rng(406);
  RateAssignment rates;
  for (const auto& name : phospho_rate_names(2)) rates[name] = rng.positive();
  auto sys = phospho_system(2, rates);
  auto an = toric_analyze(sys.mats);
  REQUIRE(an.cond1);
  CHECK(an.cond2);
  CHECK(an.cond3);
  REQUIRE(an.par.has_value());
  CHECK(an.par->A.rows() == 3);
  REQUIRE(an.binomials.size() == 6);

  // pair differences y_first - y_other per block, species order
  // (S0,S1,S2,ES0,ES1,FS1,FS2,E,F)
  auto col = [](std::vector<int> plus, std::vector<int> minus) {
    std::vector<Int> v(9, 0);
    for (int i : plus) v[i - 1] += 1;
    for (int i : minus) v[i - 1] -= 1;
    return v;
  };
  std::vector<std::vector<Int>> expect = {
      col({1, 8}, {4}),     col({1, 8}, {9, 2}), col({1, 8}, {6}),
      col({2, 8}, {5}),     col({2, 8}, {9, 3}), col({2, 8}, {7}),
  };
  const auto& c3 = *an.cond3_data;
  REQUIRE(c3.delta.cols() == 6);
  for (int p = 0; p < 6; ++p)
    for (int i = 0; i < 9; ++i) CHECK(c3.delta(i, p) == expect[p][i]);
  CHECK(rank_of(c3.delta) == 6);
  CHECK(c3.relations.cols() == 0);
  CHECK(check_condition3(c3));

  // binomial coefficients follow the kernel-basis entries: c1/c2 = b_anchor/b_other
  auto dets = determinants(sys);
  std::vector<std::pair<int, int>> pairs = {{1, 4}, {1, 7}, {1, 9}, {2, 5}, {2, 8}, {2, 10}};
  auto family = [&](int idx) { return idx == 9 || idx == 10 ? dets.D : dets.at.at(idx); };
  for (int p = 0; p < 6; ++p) {
    CHECK(an.binomials[p].i1 == pairs[p].first - 1);
    CHECK(an.binomials[p].i2 == pairs[p].second - 1);
    CHECK(an.binomials[p].c1 * family(pairs[p].second) ==
          an.binomials[p].c2 * family(pairs[p].first));
  }
}

TEST_CASE("generator covectors span the row space of the coefficient matrix") {
  oracle::Rng rng(407);
  auto run = [](const NetworkMatrices& mats) {
    auto an = toric_analyze(mats);
    REQUIRE(an.cond1);
    auto cov = binomial_covectors(an.binomials, an.sigma.cols());
    int r_sigma = rank_of(an.sigma);
    CHECK(rank_of(cov) == r_sigma);
    CHECK(rank_of(stack(an.sigma, cov)) == r_sigma);
  };
  run(build_matrices(fixtures::triangle(), triangle_rates(rng, true)));
  for (int n : {1, 2, 3}) {
    RateAssignment rates;
    for (const auto& name : phospho_rate_names(n)) rates[name] = rng.positive();
    run(phospho_system(n, rates).mats);
  }
}

TEST_CASE("parametrized states differ by a kernel-orthogonal monomial factor") {
  oracle::Rng rng(408);
  for (int n : {1, 2}) {
    RateAssignment rates;
    for (const auto& name : phospho_rate_names(n)) rates[name] = rng.positive();
    auto sys = phospho_system(n, rates);
    auto an = toric_analyze(sys.mats);
    REQUIRE(an.par.has_value());
    REQUIRE(an.par->exact);
    int w = an.par->A.rows();
    std::vector<Rat> t1(w), t2(w);
    for (int i = 0; i < w; ++i) {
      t1[i] = rng.positive();
      t2[i] = rng.positive();
    }
    auto x1 = eval_parametrization(*an.par, t1);
    auto x2 = eval_parametrization(*an.par, t2);
    for (const auto& b : an.binomials) {
      // (x2/x1)^(y_first - y_other) = 1
      Rat prod(1);
      for (size_t i = 0; i < x1.size(); ++i) {
        long e = Int(b.e2[i] - b.e1[i]).get_si();
        prod *= pow_rat(x2[i] / x1[i], e);
      }
      CHECK(prod == 1);
    }
  }
}

TEST_CASE("constructed ratio identities decide the relation check") {
  ConditionThreeData ok;
  ok.theta = {Rat(2, 3), Rat(2, 3)};
  ok.relations = IntMat(2, 1);
  ok.relations(0, 0) = 1;
  ok.relations(1, 0) = -1;
  CHECK(check_condition3(ok));
  ConditionThreeData bad;
  bad.theta = {Rat(2), Rat(3)};
  bad.relations = IntMat(2, 1);
  bad.relations(0, 0) = 1;
  bad.relations(1, 0) = -1;
  CHECK(!check_condition3(bad));
}

TEST_CASE("enlargement with no multipliers is the identity") {
  auto net = fixtures::triangle();
  auto mats = build_matrices(net, fixtures::unit_rates(net));
  RatMat sigma = mats.Sigma;
  IntMat exps = mats.Y;
  enlarge_system(sigma, exps, {});
  CHECK(sigma == mats.Sigma);
  CHECK(exps == mats.Y);
}

TEST_CASE("signaling network enlargement appends four monomial columns") {
  oracle::Rng rng(409);
  auto net = fixtures::envz_ompr();
  auto mats = build_matrices(net, random_rates(net, rng));
  RatMat sigma = mats.Sigma;
  IntMat exps = mats.Y;
  enlarge_system(sigma, exps, yp_multipliers());
  CHECK(sigma.rows() == 13);
  CHECK(sigma.cols() == 17);
  REQUIRE(exps.rows() == 17);
  // species order XD,X,XT,Xp,Y,XpY,Yp,XTYp,XDYp
  auto mono = [](std::vector<std::pair<int, int>> terms) {
    std::vector<Int> v(9, 0);
    for (auto [sp, e] : terms) v[sp - 1] = e;
    return v;
  };
  std::vector<std::vector<Int>> added = {
      mono({{1, 1}, {7, 2}}),  // XD + 2 Yp
      mono({{9, 1}, {7, 1}}),  // XDYp + Yp
      mono({{3, 1}, {7, 2}}),  // XT + 2 Yp
      mono({{8, 1}, {7, 1}}),  // XTYp + Yp
  };
  for (int r = 0; r < 4; ++r)
    for (int i = 0; i < 9; ++i) CHECK(exps(13 + r, i) == added[r][i]);
}

TEST_CASE("enlarged signaling system is toric with the six-block partition") {
  oracle::Rng rng(410);
  auto net = fixtures::envz_ompr();
  auto mats = build_matrices(net, random_rates(net, rng));
  auto an = toric_analyze(mats, 0, yp_multipliers());
  REQUIRE(an.cond1);
  CHECK(an.cond2);
  CHECK(an.cond3);
  CHECK(an.outcome.cert->blocks ==
        std::vector<std::vector<int>>{{0, 1, 2, 4, 5, 6, 7, 8, 10, 11},
                                      {3},
                                      {9},
                                      {12},
                                      {13, 14},
                                      {15, 16}});
  CHECK(an.failed_stage.empty());

  // generator covectors still span the enlarged row space
  auto cov = binomial_covectors(an.binomials, an.sigma.cols());
  CHECK(rank_of(cov) == rank_of(an.sigma));
  CHECK(rank_of(stack(an.sigma, cov)) == rank_of(an.sigma));
}

TEST_CASE("bounded multiplier search recovers an enlargement for the signaling network") {
  oracle::Rng rng(411);
  auto net = fixtures::envz_ompr();
  auto mats = build_matrices(net, random_rates(net, rng));
  auto an = toric_analyze(mats, 1);
  CHECK(an.cond1);
  CHECK(an.cond2);
  CHECK(an.cond3);
  CHECK(!an.multipliers.empty());
}

TEST_CASE("analysis stages are reported in order") {
  oracle::Rng rng(412);
  auto neq = toric_analyze(build_matrices(fixtures::triangle(), triangle_rates(rng, false)));
  CHECK(!neq.cond1);
  CHECK(neq.failed_stage == "condition 1");

  RateAssignment rates;
  for (const auto& name : phospho_rate_names(2)) rates[name] = rng.positive();
  auto ok = toric_analyze(phospho_system(2, rates).mats);
  CHECK(ok.failed_stage.empty());
}

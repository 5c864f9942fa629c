#include <doctest.h>

#include <vector>

#include "crn/fixtures.hpp"
#include "crn/network.hpp"
#include "crn/phospho.hpp"
#include "oracles.hpp"

using namespace crn;

namespace {

RateAssignment random_rates(const ReactionNetwork& net, oracle::Rng& rng) {
  RateAssignment out;
  for (const auto& r : net.reactions) out[r.rate] = rng.positive();
  return out;
}

std::vector<ReactionNetwork> all_fixtures() {
  return {fixtures::triangle(), fixtures::envz_ompr(), fixtures::phos1(), fixtures::phos2()};
}

RatMat diag(const std::vector<Rat>& k) {
  RatMat d(static_cast<int>(k.size()), static_cast<int>(k.size()));
  for (size_t i = 0; i < k.size(); ++i) d(static_cast<int>(i), static_cast<int>(i)) = k[i];
  return d;
}

}  // namespace

TEST_CASE("matrix invariants hold on every fixture at random rates") {
  oracle::Rng rng(301);
  for (const auto& net : all_fixtures()) {
    auto rates = random_rates(net, rng);
    auto mats = build_matrices(net, rates);

    // Laplacian structure
    for (int i = 0; i < mats.A_kappa.rows(); ++i) {
      Rat sum(0);
      for (int j = 0; j < mats.A_kappa.cols(); ++j) {
        sum += mats.A_kappa(i, j);
        if (i != j) CHECK(mats.A_kappa(i, j) >= 0);
      }
      CHECK(sum == 0);
    }

    // defining identities
    CHECK(mats.Sigma == to_rational(mats.Y).transposed() * mats.A_kappa.transposed());
    CHECK(mats.N == mats.Y.transposed() * mats.incidence);
    CHECK(mats.educt == mats.Y.transposed() * mats.doubling);
    CHECK(mats.A_kappa.transposed() ==
          to_rational(mats.incidence) * diag(mats.k) * to_rational(mats.doubling).transposed());

    // stoichiometric columns
    for (int j = 0; j < net.num_reactions(); ++j) {
      const auto& rx = net.reactions[j];
      for (int i = 0; i < net.num_species(); ++i)
        CHECK(mats.N(i, j) == Int(net.complexes[rx.product][i] - net.complexes[rx.educt][i]));
    }

    // both ODE formulations agree at random positive points
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rat> x(net.num_species());
      for (auto& v : x) v = rng.positive();
      auto psi = eval_monomials(mats.Y, x);
      auto phi = eval_monomials(mats.educt.transposed(), x);
      auto lhs = mats.Sigma * psi;
      std::vector<Rat> flux(phi.size());
      for (size_t j = 0; j < phi.size(); ++j) flux[j] = mats.k[j] * phi[j];
      auto rhs = to_rational(mats.N) * flux;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("one-site Laplacian transpose in closed form") {
  oracle::Rng rng(302);
  RateAssignment rates;
  for (const auto& name : phospho_rate_names(1)) rates[name] = rng.positive();
  auto sys = phospho_system(1, rates);
  const Rat kon = rates["kon0"], koff = rates["koff0"], kcat = rates["kcat0"];
  const Rat lon = rates["lon0"], loff = rates["loff0"], lcat = rates["lcat0"];
  RatMat expect(6, 6);
  auto set_row = [&](int i, std::vector<Rat> row) {
    for (int j = 0; j < 6; ++j) expect(i, j) = row[j];
  };
  set_row(0, {-kon, 0, koff, 0, 0, 0});
  set_row(1, {0, 0, kcat, 0, 0, 0});
  set_row(2, {kon, 0, -koff - kcat, 0, 0, 0});
  set_row(3, {0, 0, 0, 0, 0, lcat});
  set_row(4, {0, 0, 0, 0, -lon, loff});
  set_row(5, {0, 0, 0, 0, lon, -lcat - loff});
  CHECK(sys.mats.A_kappa.transposed() == expect);
}

TEST_CASE("one-site complex matrix rows") {
  auto net = fixtures::phos1();
  IntMat y = net.exponent_matrix();
  // species order S0, S1, ES0, FS1, E, F
  std::vector<std::vector<int>> rows = {
      {1, 0, 0, 0, 1, 0},  // S0 + E
      {0, 1, 0, 0, 1, 0},  // S1 + E
      {0, 0, 1, 0, 0, 0},  // ES0
      {1, 0, 0, 0, 0, 1},  // S0 + F
      {0, 1, 0, 0, 0, 1},  // S1 + F
      {0, 0, 0, 1, 0, 0},  // FS1
  };
  REQUIRE(y.rows() == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(y(i, j) == rows[i][j]);
}

TEST_CASE("one-site incidence and doubling matrices in closed form") {
  auto net = fixtures::phos1();
  auto mats = build_matrices(net, fixtures::unit_rates(net));

  // doubling columns select the educt complexes in network numbering
  std::vector<int> educts = {0, 2, 2, 4, 5, 5};
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i) CHECK(mats.doubling(i, j) == (i == educts[j] ? 1 : 0));

  // same matrix with complexes listed in first-appearance order of the
  // reaction list; perm maps those rows to network numbering
  std::vector<std::vector<int>> reordered = {
      {-1, 1, 0, 0, 0, 0}, {1, -1, -1, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
      {0, 0, 0, -1, 1, 0}, {0, 0, 0, 1, -1, -1}, {0, 0, 0, 0, 0, 1},
  };
  std::vector<int> perm = {1, 3, 2, 5, 6, 4};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(mats.incidence(perm[i] - 1, j) == reordered[i][j]);
}

TEST_CASE("single conversion gives the single-edge Laplacian") {
  ReactionNetwork net;
  net.species = {"A", "B"};
  net.complexes = {{1, 0}, {0, 1}};
  net.reactions = {{0, 1, "k1"}};
  auto mats = build_matrices(net, {{"k1", Rat(1)}});
  CHECK(mats.Sigma(0, 0) == -1);
  CHECK(mats.Sigma(1, 0) == 1);
  CHECK(mats.Sigma(0, 1) == 0);
  CHECK(mats.Sigma(1, 1) == 0);
}

TEST_CASE("monomial evaluation") {
  auto net = fixtures::phos1();
  auto mats = build_matrices(net, fixtures::unit_rates(net));
  std::vector<Rat> ones(6, Rat(1));
  for (const Rat& v : eval_monomials(mats.Y, ones)) CHECK(v == 1);

  auto tri = fixtures::triangle();
  auto tmats = build_matrices(tri, fixtures::unit_rates(tri));
  CHECK(eval_monomials(tmats.Y, {Rat(2), Rat(3)}) == std::vector<Rat>{Rat(4), Rat(9), Rat(6)});

  std::vector<Rat> x = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6)};
  CHECK(eval_monomials(mats.educt.transposed(), x) ==
        std::vector<Rat>{Rat(5), Rat(3), Rat(3), Rat(12), Rat(4), Rat(4)});

  CHECK_THROWS_AS(eval_monomials(mats.Y, std::vector<Rat>(5, Rat(1))), std::invalid_argument);
  CHECK_THROWS_AS(eval_monomials(mats.Y, std::vector<Rat>{Rat(1), Rat(0), Rat(1), Rat(1), Rat(1), Rat(1)}),
                  std::invalid_argument);
}

TEST_CASE("missing and non-positive rates are named") {
  auto net = fixtures::triangle();
  auto rates = fixtures::unit_rates(net);
  rates.erase("k23");
  CHECK_THROWS_WITH_AS(build_matrices(net, rates), doctest::Contains("k23"),
                       std::invalid_argument);
  rates["k23"] = Rat(0);
  CHECK_THROWS_WITH_AS(build_matrices(net, rates), doctest::Contains("k23"),
                       std::invalid_argument);
}

TEST_CASE("structural validation rejects malformed networks") {
  ReactionNetwork net;
  net.species = {"A", "B"};
  net.complexes = {{1, 0}, {0, 1}};
  net.reactions = {{0, 1, "k1"}};
  CHECK_NOTHROW(net.validate());

  auto dup = net;
  dup.complexes.push_back({1, 0});
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

  auto self_loop = net;
  self_loop.reactions[0].product = 0;
  CHECK_THROWS_AS(self_loop.validate(), std::invalid_argument);

  auto unused = net;
  unused.species.push_back("C");
  for (auto& y : unused.complexes) y.push_back(0);
  CHECK_THROWS_AS(unused.validate(), std::invalid_argument);

  auto reused = net;
  reused.reactions.push_back({1, 0, "k1"});
  CHECK_THROWS_AS(reused.validate(), std::invalid_argument);

  auto negative = net;
  negative.complexes[0][0] = -1;
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);

  auto out_of_range = net;
  out_of_range.reactions[0].product = 5;
  CHECK_THROWS_AS(out_of_range.validate(), std::invalid_argument);
}

TEST_CASE("one-site graph summary") {
  auto g = graph_summary(fixtures::phos1());
  CHECK(g.linkage_class_count == 2);
  CHECK(g.linkage_classes == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5, 6}});
  CHECK(g.terminal_sccs == std::vector<std::vector<int>>{{2}, {4}});
  CHECK(g.dim_stoichiometric == 3);
  CHECK(g.deficiency == 1);
  CHECK(g.deficiency_formula_valid);
  CHECK(g.regular);
}

TEST_CASE("two-site terminal classes are the chain products") {
  auto g = graph_summary(fixtures::phos2());
  CHECK(g.terminal_sccs == std::vector<std::vector<int>>{{3}, {6}});
  CHECK(g.deficiency == 2);
  CHECK(g.dim_stoichiometric == 6);
}

TEST_CASE("signaling network graph summary") {
  auto g = graph_summary(fixtures::envz_ompr());
  CHECK(g.linkage_class_count == 4);
  CHECK(g.dim_stoichiometric == 7);
  CHECK(g.deficiency == 2);
  CHECK(g.terminal_sccs ==
        std::vector<std::vector<int>>{{4}, {7}, {10}, {13}});
  CHECK(g.conservation.cols() == 2);
}

TEST_CASE("conservation matrix annihilates the stoichiometric matrix") {
  oracle::Rng rng(303);
  for (const auto& net : all_fixtures()) {
    auto g = graph_summary(net);
    auto mats = build_matrices(net, random_rates(net, rng));
    CHECK(g.conservation.cols() == net.num_species() - g.dim_stoichiometric);
    CHECK(rank_of(g.conservation) == g.conservation.cols());
    IntMat zt_n = g.conservation.transposed() * mats.N;
    for (int i = 0; i < zt_n.rows(); ++i)
      for (int j = 0; j < zt_n.cols(); ++j) CHECK(zt_n(i, j) == 0);
  }
}

TEST_CASE("generated n-site networks have deficiency n") {
  for (int n = 1; n <= 4; ++n) {
    auto g = graph_summary(phospho_network(n));
    CHECK(g.deficiency == n);
    CHECK(g.dim_stoichiometric == 3 * n);
    CHECK(g.linkage_class_count == 2);
    CHECK(g.regular);
  }
}

TEST_CASE("triangle graph summary") {
  auto g = graph_summary(fixtures::triangle());
  CHECK(g.linkage_class_count == 1);
  CHECK(g.dim_stoichiometric == 1);
  CHECK(g.deficiency == 1);
  CHECK(g.terminal_sccs == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(g.positive_flux);
  CHECK(g.conservation.cols() == 1);
  CHECK(g.conservation(0, 0) == g.conservation(1, 0));
}

#include "crn/report.hpp"

namespace crn {

Json rat_json(const Rat& v) { return rat_str(v); }

Json rat_vec_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

Json int_vec_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(rat_str(Rat(x)));
  return a;
}

Json int_mat_json(const IntMat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(int_vec_json(m.row(i)));
  return a;
}

Json index_json(const std::vector<int>& zero_based) {
  Json a = Json::array();
  for (int i : zero_based) a.push_back(i + 1);
  return a;
}

Json blocks_json(const std::vector<std::vector<int>>& zero_based) {
  Json a = Json::array();
  for (const auto& b : zero_based) a.push_back(index_json(b));
  return a;
}

void put_network(AnalysisReport& rep, const ReactionNetwork& net, const GraphSummary& g) {
  Json n;
  n["species"] = net.species;
  n["complexes"] = net.num_complexes();
  n["reactions"] = net.num_reactions();
  n["linkage_classes"] = g.linkage_classes;
  n["terminal_strong_classes"] = g.terminal_sccs;
  n["dim_stoichiometric"] = g.dim_stoichiometric;
  n["deficiency"] = g.deficiency;
  n["regular"] = g.regular;
  Json cons = Json::array();
  for (int j = 0; j < g.conservation.cols(); ++j) cons.push_back(int_vec_json(g.conservation.col(j)));
  n["conservation"] = cons;
  rep.results()["network"] = std::move(n);
}

void put_toric(AnalysisReport& rep, const ToricAnalysis& an) {
  Json t;
  t["monomials"] = an.sigma.cols();
  if (!an.multipliers.empty()) {
    Json ms = Json::array();
    for (const auto& m : an.multipliers) {
      Json e;
      e["monomial"] = int_vec_json(m.alpha);
      e["equation"] = m.equation + 1;
      ms.push_back(std::move(e));
    }
    t["multipliers"] = std::move(ms);
  }

  t["condition1"] = an.cond1;
  if (!an.cond1 && an.outcome.failure) {
    const CertFailure& f = *an.outcome.failure;
    Json fj;
    fj["kind"] = f.kind == CertFailure::Kind::zero_coordinate ? "zero coordinate" : "block dimension";
    if (f.kind == CertFailure::Kind::zero_coordinate) {
      fj["monomial"] = f.coordinate + 1;
    } else {
      fj["block"] = index_json(f.block);
      fj["dimension"] = f.block_dim;
    }
    fj["detail"] = f.message;
    t["failure"] = std::move(fj);
  }

  if (an.outcome.cert) {
    const ToricCertificate& c = *an.outcome.cert;
    t["partition"] = blocks_json(c.blocks);
    Json basis = Json::array();
    for (const auto& b : c.basis) basis.push_back(rat_vec_json(b));
    t["basis"] = std::move(basis);
    t["dim_kernel"] = c.dim_kernel;

    t["condition2"] = an.cond2;
    Json gens = Json::array();
    for (const auto& g : an.binomials) {
      Json gj;
      gj["c1"] = rat_json(g.c1);
      gj["monomial1"] = g.i2 + 1;
      gj["c2"] = rat_json(g.c2);
      gj["monomial2"] = g.i1 + 1;
      gens.push_back(std::move(gj));
    }
    t["binomials"] = std::move(gens);
    if (!an.cond2 && an.mixed_sign_binomial) {
      t["no_positive_solution"] =
          "binomial " + std::to_string(*an.mixed_sign_binomial + 1) +
          " has coefficients of opposite sign, so its two terms cannot cancel at any positive point";
    }

    if (an.cond3_data) {
      t["condition3"] = an.cond3;
      t["theta"] = rat_vec_json(an.cond3_data->theta);
      t["relations"] = an.cond3_data->relations.cols();
    }

    if (an.par) {
      const Parametrization& p = *an.par;
      Json pj;
      pj["w"] = p.A.rows();
      pj["A"] = int_mat_json(p.A);
      pj["exact"] = p.exact;
      if (p.exact) {
        pj["x"] = rat_vec_json(p.x_exact);
      } else {
        pj["x_float"] = p.x_approx;
        pj["residual"] = p.residual;
      }
      t["parametrization"] = std::move(pj);
    }
  }

  if (!an.failed_stage.empty()) t["failed_stage"] = an.failed_stage;
  rep.results()["toric"] = std::move(t);
}

}  // namespace crn

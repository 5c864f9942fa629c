#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crn/fixtures.hpp"
#include "crn/multistat.hpp"
#include "crn/network.hpp"
#include "crn/parse.hpp"
#include "crn/phospho.hpp"
#include "crn/report.hpp"
#include "crn/toric.hpp"

namespace {

using namespace crn;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string monomial_str(const std::vector<std::string>& species, const std::vector<Int>& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += species[i];
    if (e[i] != 1) out += "^" + e[i].get_str();
  }
  return out.empty() ? "1" : out;
}

std::string blocks_str(const std::vector<std::vector<int>>& blocks) {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += " ";
    out += "{";
    for (size_t i = 0; i < b.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(b[i] + 1);
    }
    out += "}";
  }
  return out;
}

std::string rat_vec_str(const std::vector<Rat>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

std::string dbl_vec_str(const std::vector<double>& v) {
  std::string out = "(";
  char buf[64];
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    std::snprintf(buf, sizeof buf, "%.9g", v[i]);
    out += buf;
  }
  return out + ")";
}

std::string sign_str(const SignPattern& w) {
  std::string out;
  for (Sgn s : w) out += s == Sgn::pos ? '+' : s == Sgn::neg ? '-' : '0';
  return out;
}

void print_network_summary(const ReactionNetwork& net, const GraphSummary& g) {
  std::printf("network: %d species, %d complexes, %d reactions\n", net.num_species(),
              net.num_complexes(), net.num_reactions());
  std::printf("linkage classes: %d, dim S = %d, deficiency = %d, regular: %s\n",
              g.linkage_class_count, g.dim_stoichiometric, g.deficiency,
              g.regular ? "yes" : "no");
  std::printf("conservation laws: %d\n", g.conservation.cols());
}

void print_toric(const ReactionNetwork& net, const ToricAnalysis& an) {
  if (!an.multipliers.empty()) {
    std::printf("enlarged system: %d extra equations, %d monomials\n",
                static_cast<int>(an.multipliers.size()), an.exponents.rows());
    for (const auto& m : an.multipliers)
      std::printf("  equation %d multiplied by %s\n", m.equation + 1,
                  monomial_str(net.species, m.alpha).c_str());
  }
  if (!an.cond1) {
    std::printf("condition 1 (support partition): fails\n");
    if (an.outcome.failure) std::printf("  %s\n", an.outcome.failure->message.c_str());
    std::printf("verdict: steady-state ideal has no toric structure (condition 1)\n");
    return;
  }
  const ToricCertificate& cert = *an.outcome.cert;
  std::printf("condition 1 (support partition): holds\n");
  std::printf("  partition: %s\n", blocks_str(cert.blocks).c_str());
  for (size_t j = 0; j < cert.basis.size(); ++j)
    std::printf("  b%zu = %s\n", j + 1, rat_vec_str(cert.basis[j]).c_str());
  if (!an.cond2) {
    std::printf("condition 2 (sign compatibility): fails\n");
    if (an.mixed_sign_binomial) {
      const Binomial& b = an.binomials[*an.mixed_sign_binomial];
      std::printf("  generator %s*x^(%d) - %s*x^(%d) has mixed signs\n", rat_str(b.c1).c_str(),
                  b.i2 + 1, rat_str(b.c2).c_str(), b.i1 + 1);
    }
    std::printf("verdict: no positive point satisfies the binomials (condition 2)\n");
    return;
  }
  std::printf("condition 2 (sign compatibility): holds\n");
  std::printf("binomial generators: %d\n", static_cast<int>(an.binomials.size()));
  for (const auto& b : an.binomials)
    std::printf("  %s*%s - %s*%s\n", rat_str(b.c1).c_str(),
                monomial_str(net.species, b.e1).c_str(), rat_str(b.c2).c_str(),
                monomial_str(net.species, b.e2).c_str());
  const ConditionThreeData& c3 = *an.cond3_data;
  std::printf("condition 3 (positive solvability): %s (%d relations)\n",
              an.cond3 ? "holds" : "fails", c3.relations.cols());
  if (!an.cond3) {
    std::printf("verdict: the binomial system has no positive solution (condition 3)\n");
    return;
  }
  const Parametrization& par = an.par.value();
  std::printf("parametrization: %d free parameters\n", par.A.rows());
  if (par.exact)
    std::printf("  x = %s\n", rat_vec_str(par.x_exact).c_str());
  else
    std::printf("  x ~ %s (binomial residual %.3g)\n", dbl_vec_str(par.x_approx).c_str(),
                par.residual);
  std::printf("verdict: toric steady states\n");
}

int cmd_analyze(const std::string& net_path, const std::string& rates_path, int enlarge_bound,
                bool json) {
  ReactionNetwork net = parse_network(read_file(net_path));
  RateAssignment rates = parse_rates(read_file(rates_path));
  NetworkMatrices mats = build_matrices(net, rates);
  GraphSummary g = graph_summary(net);
  ToricAnalysis an = toric_analyze(mats, enlarge_bound);
  if (json) {
    AnalysisReport rep;
    put_network(rep, net, g);
    put_toric(rep, an);
    std::printf("%s\n", rep.render_pretty().c_str());
  } else {
    print_network_summary(net, g);
    print_toric(net, an);
  }
  return (an.cond1 && an.cond2 && an.cond3) ? 0 : 2;
}

int cmd_phospho(int n, const std::string& rates_path, bool unit, bool json) {
  RateAssignment rates = unit ? phospho_unit_rates(n) : parse_rates(read_file(rates_path));
  PhosphoSystem sys = phospho_system(n, rates);
  PhosphoDeterminants dets = determinants(sys);
  CanonicalBasis basis = canonical_certificate(sys);
  std::vector<Rat> x = explicit_steady_state(sys);
  IntMat a = phospho_A(n);
  std::vector<Rat> t = {Rat(2), Rat(3), Rat(5)};
  std::vector<Rat> xt = phospho_parametrization(sys, t);
  GraphSummary g = graph_summary(sys.net);
  if (json) {
    AnalysisReport rep;
    put_network(rep, sys.net, g);
    Json p;
    p["n"] = n;
    p["D"] = rat_json(dets.D);
    Json fam = Json::object();
    for (const auto& [idx, val] : dets.at) fam[std::to_string(idx)] = rat_json(val);
    p["family"] = fam;
    p["partition"] = blocks_json(basis.cert.blocks);
    Json bs = Json::array();
    for (const auto& b : basis.cert.basis) bs.push_back(rat_vec_json(b));
    p["basis"] = bs;
    p["steady_state"] = rat_vec_json(x);
    p["A"] = int_mat_json(a);
    Json sample;
    sample["t"] = rat_vec_json(t);
    sample["x"] = rat_vec_json(xt);
    p["sample"] = sample;
    rep.results()["phospho"] = p;
    std::printf("%s\n", rep.render_pretty().c_str());
    return 0;
  }
  std::printf("%s", render_network(sys.net).c_str());
  print_network_summary(sys.net, g);
  std::printf("D = %s\n", rat_str(dets.D).c_str());
  for (const auto& [idx, val] : dets.at)
    std::printf("D_%d = %s\n", idx, rat_str(val).c_str());
  std::printf("partition: %s\n", blocks_str(basis.cert.blocks).c_str());
  std::printf("steady state: x = %s\n", rat_vec_str(x).c_str());
  std::printf("A:\n");
  for (int i = 0; i < a.rows(); ++i) {
    std::printf(" ");
    for (int j = 0; j < a.cols(); ++j) std::printf(" %s", a(i, j).get_str().c_str());
    std::printf("\n");
  }
  std::printf("sample x(t) at t = %s:\n  %s\n", rat_vec_str(t).c_str(),
              rat_vec_str(xt).c_str());
  return 0;
}

RateAssignment random_rates(const ReactionNetwork& net, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> pick(1, 40);
  RateAssignment out;
  for (const auto& r : net.reactions) {
    Rat v(pick(gen), pick(gen));
    v.canonicalize();
    out[r.rate] = v;
  }
  return out;
}

IntMat parse_z_file(const std::string& text, int s) {
  std::vector<std::vector<Int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<Int> v;
    std::string tok;
    while (ls >> tok) v.emplace_back(tok);
    if (v.empty()) continue;
    if (static_cast<int>(v.size()) != s)
      throw std::invalid_argument("conservation vector has " + std::to_string(v.size()) +
                                  " entries, expected " + std::to_string(s));
    rows.push_back(std::move(v));
  }
  IntMat z(s, static_cast<int>(rows.size()));
  for (int j = 0; j < z.cols(); ++j)
    for (int i = 0; i < s; ++i) z(i, j) = rows[j][i];
  return z;
}

int cmd_multistat(const std::string& net_path, const std::string& z_path, double tol, bool json) {
  ReactionNetwork net = parse_network(read_file(net_path));
  NetworkMatrices unit_mats = build_matrices(net, fixtures::unit_rates(net));
  ConeData cone = extreme_rays(unit_mats.N);
  auto emit = [&](const Json& extra, int code, const std::string& plain) {
    if (json) {
      AnalysisReport rep;
      put_network(rep, net, graph_summary(net));
      rep.results()["multistat"] = extra;
      std::printf("%s\n", rep.render_pretty().c_str());
    } else {
      std::printf("%s\n", plain.c_str());
    }
    return code;
  };
  if (cone.degenerate) {
    Json j;
    j["degenerate"] = true;
    return emit(j, 4, "flux cone is degenerate: no strictly positive steady-state flux exists");
  }

  ToricAnalysis probe1 = toric_analyze(build_matrices(net, random_rates(net, 0xC0FFEEu)));
  ToricAnalysis probe2 = toric_analyze(build_matrices(net, random_rates(net, 0xBEEF01u)));
  std::optional<ToricAnalysis> chosen;
  NetworkMatrices mats = unit_mats;
  std::string note;
  if (probe1.outcome.cert && probe2.outcome.cert) {
    if (probe1.outcome.cert->blocks != probe2.outcome.cert->blocks) {
      Json j;
      j["error"] = "support partition differs between rate draws";
      return emit(j, 2, "support partition differs between random rate draws; structure is rate-dependent");
    }
    if (probe1.failed_stage.empty()) {
      mats = build_matrices(net, random_rates(net, 0xC0FFEEu));
      chosen = std::move(probe1);
    } else {
      Json j;
      j["error"] = "toric structure fails at " + probe1.failed_stage;
      return emit(j, 2, "no toric structure at random rates (" + probe1.failed_stage + ")");
    }
  } else {
    ToricAnalysis symmetric = toric_analyze(unit_mats);
    if (symmetric.failed_stage.empty() && symmetric.outcome.cert) {
      note = "structure established at symmetric rates only";
      chosen = std::move(symmetric);
    } else {
      Json j;
      j["error"] = "no toric structure";
      return emit(j, 2, "steady-state ideal has no toric structure at probe or symmetric rates");
    }
  }

  const IntMat& a = chosen->par->A;
  IntMat z = z_path.empty() ? graph_summary(net).conservation
                            : parse_z_file(read_file(z_path), net.num_species());
  std::optional<MultistatWitness> w = find_witness(mats, a, z, cone);
  if (!w) {
    Json j;
    j["witness"] = false;
    if (!note.empty()) j["note"] = note;
    std::string plain = "no capacity for multistationarity: no sign vector is shared by the "
                        "parameter space and the conservation kernel";
    if (!note.empty()) plain += "\n(" + note + ")";
    return emit(j, 3, plain);
  }
  WitnessChecks checks = verify_witness(mats, *w, z, tol);
  if (json) {
    Json j;
    j["witness"] = true;
    if (!note.empty()) j["note"] = note;
    j["omega"] = sign_str(w->omega);
    j["sigma"] = rat_vec_json(w->sigma);
    j["alpha"] = rat_vec_json(w->alpha);
    j["x1"] = w->x1;
    j["x2"] = w->x2;
    j["k"] = w->k;
    Json c;
    c["residual1"] = checks.residual1;
    c["residual2"] = checks.residual2;
    c["conservation"] = checks.conservation_ok;
    c["consistency"] = checks.consistency_ok;
    c["positive"] = checks.positive_ok;
    c["distinct"] = checks.distinct_ok;
    c["signs"] = checks.signs_ok;
    c["pass"] = checks.pass;
    j["checks"] = c;
    AnalysisReport rep;
    put_network(rep, net, graph_summary(net));
    rep.results()["multistat"] = j;
    std::printf("%s\n", rep.render_pretty().c_str());
  } else {
    std::printf("multistationarity witness found\n");
    if (!note.empty()) std::printf("(%s)\n", note.c_str());
    std::printf("sign vector: %s\n", sign_str(w->omega).c_str());
    std::printf("sigma = %s\n", rat_vec_str(w->sigma).c_str());
    std::printf("alpha = %s\n", rat_vec_str(w->alpha).c_str());
    std::printf("x1 = %s\n", dbl_vec_str(w->x1).c_str());
    std::printf("x2 = %s\n", dbl_vec_str(w->x2).c_str());
    std::printf("k  = %s\n", dbl_vec_str(w->k).c_str());
    std::printf("steady-state residuals: %.3g, %.3g (tol %.3g)\n", checks.residual1,
                checks.residual2, tol);
    std::printf("checks: %s\n", checks.pass ? "pass" : "FAIL");
  }
  return checks.pass ? 0 : 2;
}

int cmd_rays(const std::string& net_path, bool json) {
  ReactionNetwork net = parse_network(read_file(net_path));
  NetworkMatrices mats = build_matrices(net, fixtures::unit_rates(net));
  ConeData cone = extreme_rays(mats.N);
  if (json) {
    AnalysisReport rep;
    Json j;
    j["degenerate"] = cone.degenerate;
    Json rays = Json::array();
    for (int c = 0; c < cone.M.cols(); ++c) rays.push_back(rat_vec_json(cone.M.col(c)));
    j["rays"] = rays;
    rep.results()["rays"] = j;
    std::printf("%s\n", rep.render_pretty().c_str());
  } else {
    std::printf("extreme rays of the non-negative flux cone: %d\n", cone.M.cols());
    for (int c = 0; c < cone.M.cols(); ++c)
      std::printf("  %s\n", rat_vec_str(cone.M.col(c)).c_str());
    std::printf("degenerate: %s\n", cone.degenerate ? "yes" : "no");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of toric steady states in mass-action networks"};
  app.require_subcommand(1);

  std::string net_path, rates_path, z_path;
  int enlarge_bound = 0;
  int phospho_n = 0;
  bool json = false, unit = false;
  double tol = 1e-9;

  CLI::App* an = app.add_subcommand("analyze", "run the toric conditions on a network");
  an->add_option("network", net_path, "network file")->required();
  an->add_option("rates", rates_path, "rate assignment file")->required();
  an->add_option("--enlarge-bound", enlarge_bound,
                 "search monomial multipliers up to this total degree when the plain system fails");
  an->add_flag("--json", json, "machine-readable output");

  CLI::App* ph = app.add_subcommand("phospho", "closed-form analysis of the n-site system");
  ph->add_option("n", phospho_n, "number of sites")->required();
  ph->add_option("--rates", rates_path, "rate assignment file");
  ph->add_flag("--unit-rates", unit, "set every rate constant to 1");
  ph->add_flag("--json", json, "machine-readable output");

  CLI::App* ms = app.add_subcommand("multistat", "search for a multistationarity witness");
  ms->add_option("network", net_path, "network file")->required();
  ms->add_option("--Z", z_path, "conservation matrix file, one vector per line");
  ms->add_option("--tol", tol, "steady-state residual tolerance");
  ms->add_flag("--json", json, "machine-readable output");

  CLI::App* ry = app.add_subcommand("rays", "extreme rays of the non-negative flux cone");
  ry->add_option("network", net_path, "network file")->required();
  ry->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(an)) return cmd_analyze(net_path, rates_path, enlarge_bound, json);
    if (app.got_subcommand(ph)) {
      if (unit == !rates_path.empty()) {
        std::fprintf(stderr, "error: provide exactly one of --rates and --unit-rates\n");
        return 1;
      }
      return cmd_phospho(phospho_n, rates_path, unit, json);
    }
    if (app.got_subcommand(ms)) return cmd_multistat(net_path, z_path, tol, json);
    if (app.got_subcommand(ry)) return cmd_rays(net_path, json);
  } catch (const crn::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}

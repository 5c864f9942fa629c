#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "crn/network.hpp"
#include "crn/toric.hpp"

namespace crn {

using Json = nlohmann::ordered_json;

/// Structured analysis output. Everything numeric that must stay exact is
/// serialized as a string ("p" or "p/q"); indices are 1-based in the JSON.
class AnalysisReport {
 public:
  AnalysisReport() {
    root_["schema"] = "toric-crn/1";
    root_["results"] = Json::object();
  }

  Json& results() { return root_["results"]; }
  const Json& root() const { return root_; }

  std::string render() const { return root_.dump(); }
  std::string render_pretty() const { return root_.dump(2); }

 private:
  Json root_;
};

Json rat_json(const Rat& v);
Json rat_vec_json(const std::vector<Rat>& v);
Json int_vec_json(const std::vector<Int>& v);
Json int_mat_json(const IntMat& m);
Json index_json(const std::vector<int>& zero_based);
Json blocks_json(const std::vector<std::vector<int>>& zero_based);

void put_network(AnalysisReport& rep, const ReactionNetwork& net, const GraphSummary& g);
void put_toric(AnalysisReport& rep, const ToricAnalysis& an);

}  // namespace crn

#include "crn/fixtures.hpp"

#include "crn/phospho.hpp"

namespace crn::fixtures {

ReactionNetwork triangle() {
  ReactionNetwork net;
  net.species = {"A", "B"};
  net.complexes = {{2, 0}, {0, 2}, {1, 1}};
  net.reactions = {{0, 1, "k12"}, {1, 0, "k21"}, {0, 2, "k13"},
                   {2, 0, "k31"}, {1, 2, "k23"}, {2, 1, "k32"}};
  net.validate();
  return net;
}

ReactionNetwork envz_ompr() {
  ReactionNetwork net;
  net.species = {"XD", "X", "XT", "Xp", "Y", "XpY", "Yp", "XTYp", "XDYp"};
  auto c = [&](std::initializer_list<int> idx) {
    std::vector<int> v(9, 0);
    for (int i : idx) v[i] += 1;
    return v;
  };
  net.complexes = {
      c({0}),     // 1  XD
      c({1}),     // 2  X
      c({2}),     // 3  XT
      c({3}),     // 4  Xp
      c({3, 4}),  // 5  Xp + Y
      c({5}),     // 6  XpY
      c({1, 6}),  // 7  X + Yp
      c({2, 6}),  // 8  XT + Yp
      c({7}),     // 9  XTYp
      c({2, 4}),  // 10 XT + Y
      c({0, 6}),  // 11 XD + Yp
      c({8}),     // 12 XDYp
      c({0, 4}),  // 13 XD + Y
  };
  net.reactions = {{0, 1, "k12"},   {1, 0, "k21"},   {1, 2, "k23"},  {2, 1, "k32"},
                   {2, 3, "k34"},   {4, 5, "k56"},   {5, 4, "k65"},  {5, 6, "k67"},
                   {7, 8, "k89"},   {8, 7, "k98"},   {8, 9, "k910"}, {10, 11, "k1112"},
                   {11, 10, "k1211"}, {11, 12, "k1213"}};
  net.validate();
  return net;
}

ReactionNetwork phos1() { return phospho_network(1); }
ReactionNetwork phos2() { return phospho_network(2); }

RateAssignment unit_rates(const ReactionNetwork& net) {
  RateAssignment r;
  for (const auto& rx : net.reactions) r[rx.rate] = Rat(1);
  return r;
}

}  // namespace crn::fixtures

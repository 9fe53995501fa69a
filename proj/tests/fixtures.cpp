#include "fixtures.hpp"

namespace fixtures {

using peqa::FiniteEqAlgebra;

namespace {
const std::vector<std::string> kDiamond = {"0", "a", "b", "1"};
const std::vector<std::vector<int>> kDiamondMeet = {
    {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
const std::vector<std::vector<int>> kChainMeet = {
    {0, 0, 0, 0}, {0, 1, 1, 1}, {0, 1, 2, 2}, {0, 1, 2, 3}};
}  // namespace

FiniteEqAlgebra diamond_b() {
  const std::vector<std::vector<int>> tilde = {
      {3, 2, 1, 0}, {3, 3, 1, 1}, {3, 2, 3, 2}, {3, 3, 3, 3}};
  const std::vector<std::vector<int>> btilde = {
      {3, 3, 3, 3}, {2, 3, 2, 3}, {1, 1, 3, 3}, {0, 1, 2, 3}};
  return peqa::build_algebra(kDiamond, kDiamondMeet, tilde, btilde, "1");
}

FiniteEqAlgebra diamond_a() {
  const std::vector<std::vector<int>> tilde = {
      {3, 2, 1, 0}, {2, 3, 0, 1}, {1, 0, 3, 2}, {0, 1, 2, 3}};
  return peqa::build_algebra(kDiamond, kDiamondMeet, tilde, tilde, "1");
}

FiniteEqAlgebra chain_c() {
  const std::vector<std::vector<int>> tilde = {
      {3, 1, 0, 0}, {1, 3, 1, 1}, {0, 1, 3, 2}, {0, 1, 2, 3}};
  return peqa::build_algebra(kDiamond, kChainMeet, tilde, tilde, "1");
}

FiniteEqAlgebra trivial() {
  return peqa::build_algebra({"1"}, {{0}}, {{0}}, {{0}}, "1");
}

}  // namespace fixtures

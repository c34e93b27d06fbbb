#include "molsym/presets.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "molsym/common.hpp"
#include "molsym/group.hpp"

namespace molsym {

namespace {

std::vector<Eigen::Vector3d> orbit(const std::string& group, const Eigen::Vector3d& seed) {
  std::vector<Eigen::Vector3d> pts;
  for (const auto& r : build_group(group)->elements()) {
    const Eigen::Vector3d p = r.apply(seed);
    const bool seen = std::any_of(pts.begin(), pts.end(), [&](const auto& q) { return (p - q).norm() < 1e-6; });
    if (!seen) pts.push_back(p);
  }
  return pts;
}

NucleusOrbit ring(const std::string& group, const std::string& el, int two_s, double radius, double z = 0) {
  return {el, two_s, orbit(group, {0, radius, z})};
}

NucleusOrbit axial_pair(const std::string& el, int two_s, double half) {
  return {el, two_s, {{0, 0, half}, {0, 0, -half}}};
}

std::vector<MoleculePreset> make_catalog() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<MoleculePreset> c;
  c.push_back({"HCl", "Cinf", {}, {{"H", 1}, {"Cl", 3}}});
  c.push_back({"S2", "Dinf", {axial_pair("S", 0, 0.94)}, {}});
  c.push_back({"H2", "Dinf", {axial_pair("H", 1, 0.37)}, {}});
  c.push_back({"D2", "Dinf", {axial_pair("D", 2, 0.37)}, {}});
  c.push_back({"H2O", "C2", {ring("C2", "H", 1, 0.757, -0.587)}, {{"O", 0}}});
  c.push_back({"NH3", "C3", {ring("C3", "H", 1, 0.94, -0.38)}, {{"N", 2}}});
  c.push_back({"SO3", "D3", {ring("D3", "O", 0, 1.43)}, {{"S", 0}}});
  c.push_back({"BF3", "D3", {ring("D3", "F", 1, 1.31)}, {{"B", 3}}});
  c.push_back({"CH4", "T", {{"H", 1, orbit("T", Eigen::Vector3d(1, 1, 1) * 0.63)}}, {{"C", 0}}});
  c.push_back({"XeF4", "D4", {ring("D4", "F", 1, 1.95)}, {{"Xe", 0}}});
  c.push_back({"C5H5-", "D5", {ring("D5", "C", 0, 1.2), ring("D5", "H", 1, 2.27)}, {}});
  c.push_back({"C6H6", "D6", {ring("D6", "C", 0, 1.39), ring("D6", "H", 1, 2.48)}, {}});
  c.push_back({"C7H7+", "D7", {ring("D7", "C", 0, 1.6), ring("D7", "H", 1, 2.69)}, {}});
  c.push_back({"C8H8-2", "D8", {ring("D8", "C", 0, 1.83), ring("D8", "H", 1, 2.92)}, {}});
  c.push_back({"SF6", "O", {{"F", 1, orbit("O", {1.56, 0, 0})}}, {{"S", 0}}});
  const Eigen::Vector3d cage = Eigen::Vector3d(0, 1, 3 * phi) * 0.7;
  c.push_back({"C60", "I", {{"C", 0, orbit("I", cage)}}, {}});
  c.push_back({"13C60", "I", {{"13C", 1, orbit("I", cage)}}, {}});
  return c;
}

std::string fold(std::string s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out += char(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

}  // namespace

const std::vector<MoleculePreset>& preset_catalog() {
  static const std::vector<MoleculePreset> catalog = make_catalog();
  return catalog;
}

const MoleculePreset& find_preset(const std::string& name) {
  const std::string key = fold(name);
  for (const auto& p : preset_catalog()) {
    const std::string full = fold(p.name);
    const std::string bare = full.substr(0, full.find_first_of("+-"));
    if (key == full || key == bare) return p;
  }
  throw InvalidArgument("unknown molecule '" + name + "'");
}

}  // namespace molsym

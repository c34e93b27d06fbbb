#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace molsym {

/// Identical nuclei forming one orbit of the symmetry group.
struct NucleusOrbit {
  std::string element;
  int two_s = 0;  // twice the nuclear spin
  std::vector<Eigen::Vector3d> coords;
};

/// Nucleus fixed by every group element; contributes only a multiplicative factor.
struct Spectator {
  std::string element;
  int two_s = 0;
};

struct MoleculePreset {
  std::string name;
  std::string group;
  std::vector<NucleusOrbit> orbits;
  std::vector<Spectator> spectators;
};

/// HCl, S2, H2, D2, H2O, NH3, SO3, BF3, CH4, XeF4, C5H5-, C6H6, C7H7+, C8H8-2, SF6, C60, 13C60.
/// Orbit coordinates are generated from seed points by the canonical group embedding;
/// rings put one nucleus on the y axis.
const std::vector<MoleculePreset>& preset_catalog();

/// Case-insensitive lookup; also accepts "C8H8" and "C5H5" without the charge.
const MoleculePreset& find_preset(const std::string& name);

}  // namespace molsym

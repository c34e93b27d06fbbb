#include "molsym/continuous.hpp"

#include <cctype>
#include <cstdlib>

namespace molsym {

ContinuousIrrep ContinuousGroup::irrep(const std::string& label) const {
  if (kind_ == Kind::Cinf) {
    if (label == "a") return {"a", 0, 1, 1};
    char* end = nullptr;
    const long v = std::strtol(label.c_str(), &end, 10);
    if (!label.empty() && end && *end == '\0') return {v == 0 ? "a" : std::to_string(v), int(v), 1, 1};
    throw InvalidArgument("Cinf has no irrep '" + label + "' (use a or an integer charge)");
  }
  if (label == "a1" || label == "a") return {"a1", 0, 1, 1};
  if (label == "a2") return {"a2", 0, 1, -1};
  if (label.size() > 1 && label[0] == 'e') {
    char* end = nullptr;
    const long v = std::strtol(label.c_str() + 1, &end, 10);
    if (end && *end == '\0' && v > 0) return {label, int(v), 2, 0};
  }
  throw InvalidArgument("Dinf has no irrep '" + label + "' (use a1, a2 or e<lambda>)");
}

std::vector<ContinuousIrrep> ContinuousGroup::one_dim_irreps() const {
  if (kind_ == Kind::Cinf) return {{"a", 0, 1, 1}};
  return {{"a1", 0, 1, 1}, {"a2", 0, 1, -1}};
}

int ContinuousGroup::multiplicity(int l, const ContinuousIrrep& r) const {
  if (l < 0) return 0;
  if (kind_ == Kind::Cinf) return std::abs(r.lambda) <= l ? 1 : 0;
  if (r.dim == 2) return r.lambda <= l ? 1 : 0;
  return ((l % 2 == 0) == (r.flip_sign == 1)) ? 1 : 0;
}

SymmetryGroup parse_group(const std::string& name) {
  SymmetryGroup g;
  if (name == "Cinf") {
    g.continuous = ContinuousGroup(ContinuousGroup::Kind::Cinf);
  } else if (name == "Dinf") {
    g.continuous = ContinuousGroup(ContinuousGroup::Kind::Dinf);
  } else {
    g.finite = build_group(name);
  }
  return g;
}

}  // namespace molsym

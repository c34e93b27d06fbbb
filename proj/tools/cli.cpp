#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "molsym/dynamics.hpp"
#include "molsym/holonomy.hpp"
#include "molsym/isotypic.hpp"
#include "molsym/species.hpp"
#include "regress.hpp"
#include "report.hpp"

namespace molsym::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Common {
  std::string format;
  std::string output;
  long long seed = 0;  // reserved; every computation is deterministic
};

struct Outcome {
  Report report;
  int status = kSuccess;
};

using Handler = std::function<Outcome()>;

// ---------------------------------------------------------------- parsing helpers

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_number(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("malformed " + what + " '" + s + "'");
  }
}

/// "1/2" -> 1, "1" -> 2, "3/2" -> 3.
int parse_two_s(const std::string& s) {
  const auto parts = split(s, '/');
  if (parts.size() == 2 && parts[1] == "2") return int(parse_number(parts[0], "spin"));
  if (parts.size() == 1) return 2 * int(parse_number(parts[0], "spin"));
  throw InvalidArgument("malformed spin '" + s + "'");
}

Eigen::Vector3d parse_vec3(const std::string& s, const std::string& what) {
  const auto p = split(s, ',');
  if (p.size() != 3) throw InvalidArgument("expected three components for " + what + ", got '" + s + "'");
  return {parse_number(p[0], what), parse_number(p[1], what), parse_number(p[2], what)};
}

/// "count:spin:x,y,z;x,y,z;..." A single seed point is expanded by the group.
NucleusOrbit parse_orbit(const std::string& spec, const SymmetryGroup& g, int index) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw InvalidArgument("orbit must be 'count:spin:coords', got '" + spec + "'");
  const int count = int(parse_number(parts[0], "orbit count"));
  NucleusOrbit o{"X" + std::to_string(index + 1), parse_two_s(parts[1]), {}};
  for (const auto& p : split(parts[2], ';')) o.coords.push_back(parse_vec3(p, "orbit coordinate"));
  if (o.coords.size() == 1 && count > 1) {
    if (!g.is_finite()) throw InvalidArgument("seed expansion needs a finite group; list every coordinate");
    const Eigen::Vector3d seed = o.coords.front();
    o.coords.clear();
    for (const auto& r : g.finite->elements()) {
      const Eigen::Vector3d v = r.apply(seed);
      bool seen = false;
      for (const auto& c : o.coords) seen = seen || (c - v).norm() < 1e-6;
      if (!seen) o.coords.push_back(v);
    }
  }
  if (int(o.coords.size()) != count)
    throw InvalidArgument("orbit '" + spec + "' has " + std::to_string(o.coords.size()) + " nuclei, expected " +
                          std::to_string(count));
  return o;
}

std::string rational_text(const Rational& v) {
  return denominator(v) == 1 ? numerator(v).str() : numerator(v).str() + "/" + denominator(v).str();
}

Json big_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<long long>::max())) return v.convert_to<long long>();
  return v.str();
}

Json rotation_json(const Rotation& r) {
  const auto e = r.euler();
  return {{"euler", {e.alpha, e.beta, e.gamma}}, {"quaternion", {r.w(), r.x(), r.y(), r.z()}}};
}

// ---------------------------------------------------------------- selectors

struct Selector {
  std::string molecule;
  std::string group;
  std::vector<std::string> orbits;
  std::vector<std::string> spectators;
};

void add_selector(CLI::App* sub, Selector& s, bool with_orbits) {
  auto* mol = sub->add_option("--molecule,-m", s.molecule, "Preset molecule (e.g. H2O, BF3, 13C60)");
  auto* grp = sub->add_option("--group,-g", s.group, "Symmetry group: C<N>, D<N>, T, O, I, Cinf, Dinf");
  mol->excludes(grp);
  if (with_orbits) {
    sub->add_option("--orbit", s.orbits, "Identical-nucleus orbit 'count:spin:x,y,z[;x,y,z...]'")->needs(grp);
    sub->add_option("--spectator", s.spectators, "Spin of a nucleus fixed by the group, e.g. 1/2")->needs(grp);
  }
}

SymmetryGroup selected_group(const Selector& s) {
  if (!s.molecule.empty()) return parse_group(find_preset(s.molecule).group);
  if (s.group.empty()) throw InvalidArgument("one of --molecule or --group is required");
  return parse_group(s.group);
}

SpeciesTable selected_species(const Selector& s) {
  if (!s.molecule.empty()) return molecule_species(find_preset(s.molecule));
  const SymmetryGroup g = selected_group(s);
  if (s.orbits.empty()) throw InvalidArgument("--group needs at least one --orbit");
  std::vector<NucleusOrbit> orbits;
  for (std::size_t i = 0; i < s.orbits.size(); ++i) orbits.push_back(parse_orbit(s.orbits[i], g, int(i)));
  std::vector<Spectator> spectators;
  for (const auto& sp : s.spectators) spectators.push_back({"Y", parse_two_s(sp)});
  return molecule_species(g, orbits, spectators);
}

/// Species display ("b*") of a molecule, or an irrep label of a group (a trailing '*' is ignored).
IrrepRef selected_irrep(const Selector& s, const std::string& species) {
  if (species.empty()) throw InvalidArgument("a species or irrep is required");
  if (!s.molecule.empty()) {
    const auto t = molecule_species(find_preset(s.molecule));
    for (const auto& d : t.species)
      if (d.display == species || d.rot == species) return resolve_irrep(t.group, d.rot);
    for (const auto& d : t.missing)
      if (d.display == species || d.rot == species)
        throw InvalidArgument("species '" + species + "' has zero statistical weight in " + s.molecule);
    throw InvalidArgument("molecule " + s.molecule + " has no species '" + species + "'");
  }
  std::string label = species;
  if (!label.empty() && label.back() == '*') label.pop_back();
  return resolve_irrep(selected_group(s), label);
}

Json species_json(const SpeciesDescriptor& d, bool with_weight) {
  Json j = {{"rot", d.rot}, {"nuc", d.nuc}, {"d", d.dim}};
  if (with_weight) j["weight"] = big_json(d.weight);
  j["display"] = d.display;
  return j;
}

Eigen::Vector3d parse_axis_vector(const std::string& s) {
  if (s == "x") return {1, 0, 0};
  if (s == "y") return {0, 1, 0};
  if (s == "z") return {0, 0, 1};
  if (s == "-z") return {0, 0, -1};
  const Eigen::Vector3d v = parse_vec3(s, "axis");
  if (v.norm() < 1e-12) throw InvalidArgument("axis must be nonzero");
  return v.normalized();
}

// ---------------------------------------------------------------- subcommands

struct Species {
  Selector sel;
};

Outcome run_species(const Species& o) {
  const auto t = selected_species(o.sel);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"species", "", true}, {"rot", "", true}, {"nuc", "", true},
               {"sigma", "", true},   {"d", "", true},   {"weight", "nuclear states", true}};
  Json list = Json::array(), missing = Json::array();
  for (const auto& d : t.species) {
    r.rows.push_back({d.display, d.rot, d.nuc, t.sigma, d.dim, big_json(d.weight)});
    list.push_back(species_json(d, true));
  }
  for (const auto& d : t.missing) missing.push_back(species_json(d, false));
  r.body = {{"group", t.group.name()},
            {"sigma", t.sigma},
            {"species", list},
            {"missing", missing},
            {"nuclear_dimension", big_json(t.nuclear_dimension)},
            {"spectator_factor", big_json(t.spectator_factor)},
            {"mixed_statistics", t.mixed_statistics}};
  r.rows_in_json = false;
  return out;
}

Outcome run_weights(const Species& o) {
  const auto t = selected_species(o.sel);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"species", "", true}, {"d", "", true}, {"weight", "nuclear states", true}, {"d_weight", "", true}};
  BigInt total = 0;
  for (const auto& d : t.species) {
    r.rows.push_back({d.display, d.dim, big_json(d.weight), big_json(d.dim * d.weight)});
    total += d.dim * d.weight;
  }
  r.body = {{"group", t.group.name()},
            {"sigma", t.sigma},
            {"sum_d_weight", big_json(total)},
            {"nuclear_dimension", big_json(t.nuclear_dimension)},
            {"spectator_factor", big_json(t.spectator_factor)}};
  return out;
}

struct Fraction {
  Selector sel;
  std::vector<std::string> cutoffs{"2", "4", "8", "inf"};
  std::string weighting = "nuclear";
};

Outcome run_fraction(const Fraction& o) {
  const auto t = selected_species(o.sel);
  const FractionWeight w = o.weighting == "rotational" ? FractionWeight::RotationalIrrep : FractionWeight::NuclearIrrep;
  Outcome out;
  auto& r = out.report;
  r.columns = {{"cutoff", "l", true}, {"display", "", false}, {"exact", "", true}, {"value", "", false}};
  for (const auto& c : o.cutoffs) {
    if (c == "inf") {
      const Rational f = entangled_fraction_limit(t);
      r.rows.push_back({c, rational_text(f), rational_text(f), f.convert_to<double>()});
      continue;
    }
    const int l = int(parse_number(c, "cutoff"));
    check_ell(l);
    const Rational f = entangled_fraction(t, l, w);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", f.convert_to<double>());
    r.rows.push_back({c, buf, rational_text(f), f.convert_to<double>()});
  }
  r.body = {{"group", t.group.name()}, {"sigma", t.sigma}};
  return out;
}

struct Multiplicities {
  Selector sel;
  std::vector<std::string> irreps;
  int lmin = 0;
  int lmax = 10;
};

Outcome run_multiplicities(const Multiplicities& o) {
  const SymmetryGroup g = selected_group(o.sel);
  check_ell(o.lmax);
  if (o.lmin < 0 || o.lmin > o.lmax) throw InvalidArgument("need 0 <= lmin <= lmax");
  std::vector<std::string> labels = o.irreps;
  if (labels.empty()) {
    if (!g.is_finite()) throw InvalidArgument("continuous groups need --irrep");
    for (const auto& ir : g.finite->irreps()) labels.push_back(ir.label);
  }
  Outcome out;
  auto& r = out.report;
  r.columns.push_back({"l", "", true});
  for (const auto& l : labels) r.columns.push_back({l, "", true});
  for (int l = o.lmin; l <= o.lmax; ++l) {
    std::vector<Json> row{l};
    for (const auto& lab : labels) row.push_back(multiplicity(l, g, lab));
    r.rows.push_back(std::move(row));
  }
  r.body = {{"group", g.name()}};
  return out;
}

struct FourierCheck {
  Selector sel;
  std::string species;
  int lmax = 8;
  int quadrature = -1;
  int zak_lmax = 0;
  double tolerance = 1e-8;
};

double zak_cross_orthogonality(const FiniteGroup& g, int lmax) {
  const Rotation s = Rotation::from_euler(0.3, 0.7, 1.1);
  std::vector<CVector> states;
  for (int r = 0; r < int(g.irreps().size()); ++r) {
    const int d = g.irrep(r).dim;
    for (int mu = 0; mu < d; ++mu)
      for (int nu = 0; nu < d; ++nu) {
        CVector v = zak_state(g, r, s, mu, nu, lmax);
        if (v.norm() > 1e-12) states.push_back(v / v.norm());
      }
  }
  double worst = 0;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j) worst = std::max(worst, std::abs(states[i].dot(states[j])));
  return worst;
}

Outcome run_fourier(const FourierCheck& o) {
  const IrrepRef ir = selected_irrep(o.sel, o.species);
  const int q = o.quadrature < 0 ? o.lmax : o.quadrature;
  const auto rep = fourier_roundtrip(ir, o.lmax, q);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"check", "", true}, {"states", "", true}, {"points", "", true}, {"residual", "", false}};
  r.rows.push_back({"gram", rep.states, rep.quadrature_points, rep.residual});
  bool pass = rep.residual < o.tolerance;
  r.body = {{"group", ir.group.name()},
            {"irrep", ir.label},
            {"lmax", o.lmax},
            {"quadrature", q},
            {"states", rep.states},
            {"quadrature_points", rep.quadrature_points},
            {"gram_residual", rep.residual}};
  if (o.zak_lmax > 0) {
    if (!ir.group.is_finite()) throw InvalidArgument("Zak states need a finite group");
    check_ell(o.zak_lmax);
    const double z = zak_cross_orthogonality(*ir.group.finite, o.zak_lmax);
    r.rows.push_back({"zak", nullptr, nullptr, z});
    r.body["zak_lmax"] = o.zak_lmax;
    r.body["zak_cross_overlap"] = z;
    pass = pass && z < o.tolerance;
  }
  r.body["tolerance"] = o.tolerance;
  r.body["pass"] = pass;
  r.rows_in_json = false;
  if (!pass) out.status = kComputationError;
  return out;
}

struct Position {
  Selector sel;
  std::string species;
  std::vector<double> euler{0, 0, 0};
  double delta = 0.1;
  int lmax = 10;
  int mu = 0;
};

Outcome run_position(const Position& o) {
  const IrrepRef ir = selected_irrep(o.sel, o.species);
  check_ell(o.lmax);
  if (o.delta < 0) throw InvalidArgument("delta must be non-negative");
  if (o.mu < 0 || o.mu >= ir.dim) throw InvalidArgument("mu out of range");
  const Rotation rot = Rotation::from_euler(o.euler[0], o.euler[1], o.euler[2]);
  const auto st = position_state(ir, rot, o.mu, o.lmax, o.delta);
  const auto cp = canonicalize(rot, ir.group);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"l", "", true}, {"m", "", true}, {"kappa", "", true}, {"re", "", false}, {"im", "", false}};
  for (std::size_t i = 0; i < st.index.size(); ++i)
    r.rows.push_back({st.index[i].l, st.index[i].m, st.index[i].kappa, st.coeffs[i].real(), st.coeffs[i].imag()});
  r.body = {{"group", ir.group.name()},
            {"irrep", ir.label},
            {"mu", o.mu},
            {"norm", st.coeffs.norm()},
            {"rotation", rotation_json(rot)},
            {"coset_representative", rotation_json(cp.s)},
            {"element", cp.element}};
  return out;
}

struct Connection {
  Selector sel;
  std::string irrep;
  std::string axes = "xyz";
  std::vector<double> deltas{0.5, 0.2, 0.1, 0.05};
  std::vector<std::string> pairs;
  double tail = 1e-12;
  double threshold = 1e-6;
};

Outcome run_connection(const Connection& o) {
  const IrrepRef ir = selected_irrep(o.sel, o.irrep);
  if (!ir.group.is_finite()) throw InvalidArgument("connection scans need a finite group");
  std::vector<int> axes;
  for (char c : o.axes) axes.push_back(parse_axis(c));
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : o.pairs) {
    const auto mn = split(p, ':');
    if (mn.size() != 2) throw InvalidArgument("pair must be 'mu:nu', got '" + p + "'");
    pairs.push_back({int(parse_number(mn[0], "mu")), int(parse_number(mn[1], "nu"))});
  }
  FlatnessOptions opt;
  opt.tail = o.tail;
  opt.threshold = o.threshold;
  const auto rep = flatness_scan(*ir.group.finite, ir.index, pairs, axes, o.deltas, opt);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"delta", "", false}, {"mu", "", true},  {"nu", "", true},  {"axis", "", true},
               {"re", "", false},    {"im", "", false}, {"abs", "", false}};
  for (const auto& e : rep.entries)
    r.rows.push_back(
        {e.delta, e.mu, e.nu, std::string(1, axis_name(e.axis)), e.value.real(), e.value.imag(), std::abs(e.value)});
  const auto proof = symmetry_flatness_proof(*ir.group.finite, ir.index);
  r.body = {{"group", rep.group},
            {"irrep", rep.irrep},
            {"deltas", rep.deltas},
            {"lmax", rep.lmax},
            {"max_abs", rep.max_abs},
            {"decaying", rep.decaying},
            {"reason", to_string(flatness_reason(ir.group, ir.label))},
            {"symmetry_argument", proof.argument}};
  return out;
}

struct Monodromy {
  Selector sel;
  std::string irrep;
  int element = -1;
};

Json group_json(const MonodromyGroup& m) {
  Json kernel_order = m.kernel_order ? Json(m.kernel_order) : Json(nullptr);
  Json quotient_order = m.quotient_order ? Json(m.quotient_order) : Json(nullptr);
  return {{"group", m.group},
          {"irrep", m.irrep},
          {"kernel", m.kernel_label},
          {"kernel_order", kernel_order},
          {"quotient", m.quotient},
          {"quotient_order", quotient_order},
          {"non_abelian", m.non_abelian}};
}

Outcome run_monodromy(const Monodromy& o) {
  const IrrepRef ir = selected_irrep(o.sel, o.irrep);
  const auto m = monodromy_group(ir.group, ir.label);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"group", "", true},        {"irrep", "", true},    {"kernel", "", true},
               {"kernel_order", "", true}, {"quotient", "", true}, {"quotient_order", "", true},
               {"non_abelian", "", true},  {"flatness", "", true}};
  Json gj = group_json(m);
  const auto reason = to_string(flatness_reason(ir.group, ir.label));
  r.rows.push_back(
      {m.group, m.irrep, m.kernel_label, gj["kernel_order"], m.quotient, gj["quotient_order"], m.non_abelian, reason});
  r.body = gj;
  r.body["flatness"] = reason;
  if (o.element >= 0) {
    if (!ir.group.is_finite()) throw InvalidArgument("--element needs a finite group");
    if (o.element >= ir.group.finite->order()) throw InvalidArgument("element index out of range");
    const auto mat = monodromy_matrix(*ir.group.finite, ir.index, o.element);
    Json rows = Json::array();
    for (int i = 0; i < mat.dim(); ++i) {
      Json row = Json::array();
      for (int j = 0; j < mat.dim(); ++j) row.push_back(mat(i, j).str());
      rows.push_back(row);
    }
    r.body["element"] = o.element;
    r.body["rotation"] = rotation_json(ir.group.finite->element(o.element));
    r.body["fiber_matrix"] = rows;
  }
  r.rows_in_json = false;
  return out;
}

struct Conjecture {
  Selector sel;
  std::vector<std::string> irreps;
};

Outcome run_conjecture(const Conjecture& o) {
  const SymmetryGroup g = selected_group(o.sel);
  std::vector<std::string> labels = o.irreps;
  if (labels.empty()) {
    if (g.is_finite()) {
      for (const auto& ir : g.finite->irreps()) labels.push_back(ir.label);
    } else {
      for (const auto& ir : g.continuous->one_dim_irreps()) labels.push_back(ir.label);
    }
  }
  Outcome out;
  auto& r = out.report;
  r.columns = {{"group", "", true},
               {"irrep", "", true},
               {"holds", "", true},
               {"cover_order", "", true},
               {"monodromy", "", true},
               {"cover_quotient", "", true},
               {"kernel_is_double_cover", "", true},
               {"induced_isomorphism", "", true},
               {"witness", "", true}};
  bool all = true;
  for (const auto& lab : labels) {
    const auto c = conjecture_check(g, lab);
    all = all && c.holds;
    r.rows.push_back({c.group, c.irrep, c.holds, c.cover_order ? Json(c.cover_order) : Json(nullptr),
                      c.monodromy.quotient, c.cover_quotient, c.kernel_is_double_cover, c.induced_isomorphism,
                      c.witness});
  }
  r.body = {{"group", g.name()}, {"all_hold", all}};
  return out;
}

struct Toy2d {
  std::string species = "para";
  std::string spin;
  double phi = 0.4;
  int lmax = 6;
};

NuclearSpin parse_spin(const std::string& s) {
  if (s == "singlet") return NuclearSpin::Singlet;
  if (s == "up") return NuclearSpin::TripletUp;
  if (s == "zero") return NuclearSpin::TripletZero;
  if (s == "down") return NuclearSpin::TripletDown;
  throw InvalidArgument("unknown nuclear spin state '" + s + "'");
}

Outcome run_toy2d(const Toy2d& o) {
  PlanarSpecies sp;
  if (o.species == "para")
    sp = PlanarSpecies::Para;
  else if (o.species == "ortho")
    sp = PlanarSpecies::Ortho;
  else
    throw InvalidArgument("species must be para or ortho");
  const NuclearSpin spin = o.spin.empty()
                               ? (sp == PlanarSpecies::Para ? NuclearSpin::Singlet : NuclearSpin::TripletZero)
                               : parse_spin(o.spin);
  const auto st = planar_position_state(sp, o.phi, o.lmax, spin);
  const auto rot = planar_rotate(st, kPi);
  const cplx pi_phase = planar_pi_phase(st.coeffs);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"quantity", "", true}, {"re", "", false}, {"im", "", false}};
  r.rows.push_back({"exchange_sign", swap_sign(spin), 0});
  r.rows.push_back({"pi_rotation_phase", pi_phase.real(), pi_phase.imag()});
  r.rows.push_back({"perrotation_sign", planar_perrotation_sign(st), 0});
  if (rot.pi_phase) r.rows.push_back({"lab_pi_rotation_phase", rot.pi_phase->real(), rot.pi_phase->imag()});
  Json ls = Json::array();
  for (const auto& [l, c] : st.coeffs) ls.push_back(l);
  r.body = {{"species", to_string(st.species)}, {"l_support", ls}};
  return out;
}

struct Strobe {
  std::string group = "Dinf";
  std::string species = "a1";
  int pulses = 3;
  double tilt = 60;
  double eta = 2;
  int lmax = 24;
  double B = 1;
  int samples = 64;
  std::string target = "-z";
};

Outcome run_strobe(const Strobe& o) {
  const SymmetryGroup g = parse_group(o.group);
  if (o.pulses < 1) throw InvalidArgument("need at least one pulse");
  const auto start = rotor_basis_state(g, o.species, o.species == "a2" ? 1 : 0, 0, o.lmax, o.B);
  const auto schedule = tilted_schedule(o.pulses, o.tilt * kPi / 180, start.revival_time());
  const Eigen::Vector3d target = o.target == "last" ? schedule.back().axis : parse_axis_vector(o.target);
  const auto tr = stroboscopic_reorient(start, schedule, o.eta, target, o.samples);
  Outcome out;
  auto& r = out.report;
  r.columns = {{"time", "1/B", false}, {"pulses", "", true}, {"alignment", "", false}};
  for (const auto& s : tr.samples) r.rows.push_back({s.time, s.pulses_applied, s.value});
  Json axes = Json::array();
  for (const auto& p : schedule) axes.push_back({p.axis.x(), p.axis.y(), p.axis.z()});
  r.body = {{"revival_time", start.revival_time()},
            {"pulse_axes", axes},
            {"target", {target.x(), target.y(), target.z()}},
            {"initial", tr.initial},
            {"peak_after_pulse", tr.peak_after_pulse},
            {"leakage", tr.leakage},
            {"warnings", tr.warnings}};
  return out;
}

struct Fringe {
  std::string group = "Dinf";
  std::string species = "a1";
  int l = 0;
  int m = 0;
  std::string axis = "x";
};

Outcome run_fringe(const Fringe& o) {
  const SymmetryGroup g = parse_group(o.group);
  double alpha;
  if (o.axis == "x")
    alpha = 0;
  else if (o.axis == "y")
    alpha = kPi / 2;
  else
    alpha = parse_number(o.axis, "azimuth");
  const auto ref = rotor_basis_state(g, o.species, o.l, o.m, o.l);
  const auto f = interferometer_phase(ref, equatorial_pi(alpha));
  Outcome out;
  auto& r = out.report;
  r.columns = {{"l", "", true},   {"azimuth", "rad", false}, {"re", "", false},
               {"im", "", false}, {"phase", "rad", false},   {"visibility", "", false}};
  r.rows.push_back({o.l, alpha, f.factor.real(), f.factor.imag(), f.phase, f.visibility});
  return out;
}

struct Regress {
  std::string table = "all";
  std::string fixtures;
  bool mismatches_only = false;
};

Outcome run_regress(const Regress& o) {
  const std::string dir = o.fixtures.empty() ? default_fixture_dir() : o.fixtures;
  std::vector<std::string> tables;
  if (o.table == "all")
    tables = regression_tables();
  else
    tables = split(o.table, ',');
  Outcome out;
  auto& r = out.report;
  r.columns = {{"table", "", true},    {"row", "", true},    {"column", "", true},
               {"expected", "", true}, {"actual", "", true}, {"ok", "", true}};
  Json summary = Json::array();
  bool all = true;
  for (const auto& t : tables) {
    const auto res = run_regression(t, dir);
    all = all && res.passed();
    for (const auto* list : {&res.cells, &res.invariants})
      for (const auto& c : *list)
        if (!o.mismatches_only || !c.ok) r.rows.push_back({c.table, c.row, c.column, c.expected, c.actual, c.ok});
    summary.push_back({{"table", t},
                       {"fixture", t + ".json"},
                       {"tolerance", res.tolerance},
                       {"cells", res.cells.size()},
                       {"matched", res.matched()},
                       {"invariants", res.invariants.size()},
                       {"passed", res.passed()}});
  }
  r.body = {{"summary", summary}, {"passed", all}};
  if (!all) out.status = kComputationError;
  return out;
}

// ---------------------------------------------------------------- plumbing

Json resolved_config(const CLI::App* sub) {
  Json c = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help") continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (opt->get_expected_max() == 0)
        c[name] = true;
      else if (res.size() == 1 && opt->get_expected_max() == 1)
        c[name] = res.front();
      else
        c[name] = res;
    } else if (opt->get_expected_max() == 0) {
      c[name] = false;
    } else if (opt->get_default_str() == "{}") {
      c[name] = Json::array();
    } else if (!opt->get_default_str().empty()) {
      c[name] = opt->get_default_str();
    } else {
      c[name] = nullptr;
    }
  }
  c["threads"] = thread_count();
  c["version"] = kVersion;
  return c;
}

void add_common(CLI::App* sub, Common& c, const std::string& default_format) {
  c.format = default_format;
  sub->add_option("--format,-f", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "markdown-table"}));
  sub->add_option("--output,-o", c.output, "Write the artifact to this path instead of stdout");
  sub->add_option("--seed", c.seed, "Reserved; all computations are deterministic");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rotation-spin species of symmetric molecules", "molsym"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::map<CLI::App*, std::pair<Common*, Handler>> handlers;
  std::vector<std::unique_ptr<Common>> commons;
  auto add = [&](const std::string& name, const std::string& desc, const std::string& fmt) {
    CLI::App* sub = app.add_subcommand(name, desc);
    commons.push_back(std::make_unique<Common>());
    add_common(sub, *commons.back(), fmt);
    return std::pair{sub, commons.back().get()};
  };

  Species species_o;
  {
    auto [sub, c] = add("species", "Admissible species with statistical weights", "json");
    add_selector(sub, species_o.sel, true);
    handlers[sub] = {c, [&] { return run_species(species_o); }};
  }
  Species weights_o;
  {
    auto [sub, c] = add("weights", "Nuclear-spin statistical weights and their dimension sum", "json");
    add_selector(sub, weights_o.sel, true);
    handlers[sub] = {c, [&] { return run_weights(weights_o); }};
  }
  Fraction fraction_o;
  {
    auto [sub, c] = add("fraction", "Fraction of intrinsically entangled states", "csv");
    add_selector(sub, fraction_o.sel, true);
    sub->add_option("--cutoffs", fraction_o.cutoffs, "Angular momentum cutoffs; 'inf' for the limit")->delimiter(',');
    sub->add_option("--weighting", fraction_o.weighting, "State counting convention")
        ->check(CLI::IsMember({"nuclear", "rotational"}));
    handlers[sub] = {c, [&] { return run_fraction(fraction_o); }};
  }
  Multiplicities mult_o;
  {
    auto [sub, c] = add("multiplicities", "Branching multiplicities mult_l(irrep)", "csv");
    add_selector(sub, mult_o.sel, false);
    sub->add_option("--irrep,-r", mult_o.irreps, "Irrep labels (default: all)")->delimiter(',');
    sub->add_option("--lmin", mult_o.lmin, "Smallest l");
    sub->add_option("--lmax", mult_o.lmax, "Largest l");
    handlers[sub] = {c, [&] { return run_multiplicities(mult_o); }};
  }
  FourierCheck fourier_o;
  {
    auto [sub, c] = add("fourier-check", "Gram residual of the position/momentum transform", "json");
    add_selector(sub, fourier_o.sel, false);
    sub->add_option("--species,-s", fourier_o.species, "Species or irrep")->required();
    sub->add_option("--lmax", fourier_o.lmax, "Momentum truncation");
    sub->add_option("--quadrature,-q", fourier_o.quadrature, "Quadrature order (default: lmax)");
    sub->add_option("--zak-lmax", fourier_o.zak_lmax, "Also check Zak cross-label orthogonality at this truncation");
    sub->add_option("--tolerance", fourier_o.tolerance, "Pass threshold");
    handlers[sub] = {c, [&] { return run_fourier(fourier_o); }};
  }
  Position position_o;
  {
    auto [sub, c] = add("position", "Momentum coefficients of a species position state", "csv");
    add_selector(sub, position_o.sel, false);
    sub->add_option("--species,-s", position_o.species, "Species or irrep")->required();
    sub->add_option("--euler", position_o.euler, "z-y-z Euler angles in radians")->delimiter(',')->expected(3);
    sub->add_option("--delta", position_o.delta, "Damping exp(-delta l(l+1)/2)");
    sub->add_option("--lmax", position_o.lmax, "Momentum truncation");
    sub->add_option("--mu", position_o.mu, "Fiber index");
    handlers[sub] = {c, [&] { return run_position(position_o); }};
  }
  Connection conn_o;
  {
    auto [sub, c] = add("connection", "Regularized connection components over a damping grid", "csv");
    add_selector(sub, conn_o.sel, false);
    sub->add_option("--irrep,-r", conn_o.irrep, "Irrep")->required();
    sub->add_option("--axes", conn_o.axes, "Subset of xyz");
    sub->add_option("--deltas", conn_o.deltas, "Strictly descending damping values")->delimiter(',');
    sub->add_option("--pairs", conn_o.pairs, "Fiber pairs mu:nu (default: all)")->delimiter(',');
    sub->add_option("--tail", conn_o.tail, "Truncation weight exp(-delta l(l+1))");
    sub->add_option("--threshold", conn_o.threshold, "Required magnitude at the smallest delta");
    handlers[sub] = {c, [&] { return run_connection(conn_o); }};
  }
  Monodromy mono_o;
  {
    auto [sub, c] = add("monodromy", "Monodromy group G / ker(irrep)", "json");
    add_selector(sub, mono_o.sel, false);
    sub->add_option("--irrep,-r", mono_o.irrep, "Irrep or species")->required();
    sub->add_option("--element", mono_o.element, "Also print the exact fiber matrix for this element index");
    handlers[sub] = {c, [&] { return run_monodromy(mono_o); }};
  }
  Conjecture conj_o;
  {
    auto [sub, c] = add("conjecture", "Binary-cover check of the flat-connection conjecture", "json");
    add_selector(sub, conj_o.sel, false);
    sub->add_option("--irrep,-r", conj_o.irreps, "Irreps (default: all)")->delimiter(',');
    handlers[sub] = {c, [&] { return run_conjecture(conj_o); }};
  }
  Toy2d toy_o;
  {
    auto [sub, c] = add("toy2d", "Planar homonuclear diatomic: pi-rotation phases", "json");
    sub->add_option("--species", toy_o.species, "para or ortho")->check(CLI::IsMember({"para", "ortho"}));
    sub->add_option("--spin", toy_o.spin, "singlet, up, zero or down (default: by species)");
    sub->add_option("--phi", toy_o.phi, "Position angle in radians");
    sub->add_option("--lmax", toy_o.lmax, "Truncation |l| <= lmax");
    handlers[sub] = {c, [&] { return run_toy2d(toy_o); }};
  }
  Strobe strobe_o;
  {
    auto [sub, c] = add("strobe", "Stroboscopic kicks of a linear rotor", "csv");
    sub->add_option("--group", strobe_o.group, "Cinf or Dinf");
    sub->add_option("--species", strobe_o.species, "One-dimensional species");
    sub->add_option("--pulses", strobe_o.pulses, "Number of kicks, one per revival");
    sub->add_option("--tilt", strobe_o.tilt, "Axis tilt per pulse in degrees");
    sub->add_option("--eta", strobe_o.eta, "Kick strength");
    sub->add_option("--lmax", strobe_o.lmax, "Basis truncation");
    sub->add_option("--B", strobe_o.B, "Rotational constant (angular frequency)");
    sub->add_option("--samples", strobe_o.samples, "Samples per revival period");
    sub->add_option("--target", strobe_o.target, "Alignment axis x|y|z|-z|x,y,z, or 'last' for the final pulse axis");
    handlers[sub] = {c, [&] { return run_strobe(strobe_o); }};
  }
  Fringe fringe_o;
  {
    auto [sub, c] = add("fringe", "Interferometer fringe factor under an equatorial pi-rotation", "json");
    sub->add_option("--group", fringe_o.group, "Cinf or Dinf");
    sub->add_option("--species", fringe_o.species, "One-dimensional species");
    sub->add_option("--l", fringe_o.l, "Angular momentum of the reference state");
    sub->add_option("--m", fringe_o.m, "Projection (must be 0)");
    sub->add_option("--axis", fringe_o.axis, "x, y or an azimuth in radians");
    handlers[sub] = {c, [&] { return run_fringe(fringe_o); }};
  }
  Regress regress_o;
  {
    auto [sub, c] = add("regress", "Compare computed tables with the bundled fixtures", "markdown-table");
    sub->add_option("--table,-t", regress_o.table, "Table name, comma list or 'all'");
    sub->add_option("--fixtures", regress_o.fixtures, "Fixture directory");
    sub->add_flag("--mismatches-only", regress_o.mismatches_only, "Only list failing cells");
    handlers[sub] = {c, [&] { return run_regress(regress_o); }};
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  auto& [common, handler] = handlers.at(sub);
  try {
    const Format fmt = parse_format(common->format);
    Outcome o = handler();
    o.report.command = sub->get_name();
    o.report.config = resolved_config(sub);
    if (common->output.empty()) {
      emit(o.report, fmt, out);
    } else {
      std::ofstream f(common->output);
      if (!f) throw ComputationError("cannot write " + common->output);
      emit(o.report, fmt, f);
    }
    if (o.status != kSuccess) err << "error: " << sub->get_name() << " check failed\n";
    return o.status;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const ComputationError& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kComputationError;
  }
}

}  // namespace molsym::cli

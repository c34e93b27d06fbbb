#include "regress.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <tuple>

#include "molsym/holonomy.hpp"
#include "molsym/isotypic.hpp"
#include "molsym/species.hpp"

#ifndef MOLSYM_FIXTURE_DIR
#define MOLSYM_FIXTURE_DIR "fixtures"
#endif

namespace molsym::cli {

int TableResult::matched() const {
  int n = 0;
  for (const auto& c : cells) n += c.ok;
  return n;
}

bool TableResult::passed() const {
  for (const auto& c : invariants)
    if (!c.ok) return false;
  return matched() == int(cells.size());
}

const std::vector<std::string>& regression_tables() {
  static const std::vector<std::string> t = {"buckeyball-mult", "buckeyball-weights", "fractions", "species",
                                             "monodromy-groups"};
  return t;
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("MOLSYM_FIXTURES"); env && *env) return env;
  return MOLSYM_FIXTURE_DIR;
}

Json load_fixture(const std::string& dir, const std::string& table) {
  const std::string path = dir + "/" + table + ".json";
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open fixture " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument("malformed fixture " + path + ": " + e.what());
  }
}

namespace {

std::string str(const BigInt& v) { return v.str(); }

std::string str(const Rational& v) {
  return denominator(v) == 1 ? numerator(v).str() : numerator(v).str() + "/" + denominator(v).str();
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string tolerance_text(const Json& t) { return t.is_string() ? t.get<std::string>() : t.dump(); }

void buckeyball_mult(const Json& fx, TableResult& res) {
  const auto g = build_group(fx.at("group").get<std::string>());
  const auto cols = fx.at("columns").get<std::vector<std::string>>();
  for (const auto& row : fx.at("rows")) {
    const int l = row.at(0).get<int>();
    for (std::size_t c = 1; c < cols.size(); ++c) {
      const int want = row.at(c).get<int>();
      const int got = multiplicity(l, *g, g->irrep_index(cols[c]));
      res.cells.push_back(
          {res.table, "l=" + std::to_string(l), cols[c], std::to_string(want), std::to_string(got), want == got});
    }
  }
}

void buckeyball_weights(const Json& fx, TableResult& res) {
  const auto t = molecule_species(find_preset(fx.at("molecule").get<std::string>()));
  BigInt total = 0;
  for (const auto& row : fx.at("rows")) {
    const auto name = row.at("species").get<std::string>();
    std::string got = "absent";
    for (const auto& s : t.species)
      if (s.display == name) got = str(s.weight);
    const auto want = row.at("weight").get<std::string>();
    res.cells.push_back({res.table, name, "weight", want, got, want == got});
  }
  for (const auto& s : t.species) total += s.dim * s.weight;
  const auto want = fx.at("total").get<std::string>();
  res.invariants.push_back({res.table, "sum", "d*weight", want, str(total), want == str(total)});
}

void fractions(const Json& fx, TableResult& res) {
  const double tol = fx.at("tolerance").at("decimal").get<double>();
  std::map<std::string, SpeciesTable> cache;
  for (const auto& row : fx.at("rows")) {
    const auto mol = row.at("molecule").get<std::string>();
    if (!cache.count(mol)) cache.emplace(mol, molecule_species(find_preset(mol)));
    const auto& t = cache.at(mol);
    const auto cut = row.at("cutoff").get<std::string>();
    const auto want = row.at("value").get<std::string>();
    CellCheck c{res.table, mol, "l<=" + cut, want, "", false};
    if (cut == "inf") {
      const Rational got = entangled_fraction_limit(t);
      c.actual = str(got);
      c.ok = got == parse_rational(want);
    } else {
      const double got = entangled_fraction(t, std::stoi(cut)).convert_to<double>();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", got);
      c.actual = buf;
      c.ok = std::abs(got - std::stod(want)) <= tol + 1e-12;
    }
    res.cells.push_back(std::move(c));
  }
}

void species(const Json& fx, TableResult& res) {
  using Key = std::tuple<std::string, std::string, std::string, int>;  // display, rot, nuc, d
  std::map<std::pair<std::string, std::string>, std::set<Key>> expected;
  std::vector<std::pair<std::string, std::string>> order;
  for (const auto& row : fx.at("rows")) {
    std::pair<std::string, std::string> gs{row.at("group"), row.at("sigma")};
    if (!expected.count(gs)) order.push_back(gs);
    expected[gs].insert({row.at("species"), row.at("rot"), row.at("nuc"), row.at("d").get<int>()});
  }
  auto text = [](const Key& k) {
    return std::get<1>(k) + " (x) " + std::get<2>(k) + " d=" + std::to_string(std::get<3>(k));
  };
  for (const auto& gs : order) {
    const auto g = build_group(gs.first);
    const auto t = enumerate_species(*g, g->irrep_index(gs.second), std::vector<BigInt>(g->irreps().size(), 1));
    std::set<Key> got;
    for (const auto& s : t.species) got.insert({s.display, s.rot, s.nuc, s.dim});
    const std::string row = gs.first + " sigma=" + gs.second;
    for (const auto& k : expected[gs]) {
      const bool ok = got.count(k) > 0;
      res.cells.push_back({res.table, row, std::get<0>(k), text(k), ok ? text(k) : "absent", ok});
    }
    for (const auto& k : got)
      if (!expected[gs].count(k)) res.cells.push_back({res.table, row, std::get<0>(k), "absent", text(k), false});
  }
}

// Index i of a family label: "e" -> 1, "e2" -> 2, "1e3" -> 3.
int label_index(const std::string& label) {
  std::smatch m;
  static const std::regex re(R"(^[12]?[a-z](\d*)$)");
  if (!std::regex_match(label, m, re) || m[1].str().empty()) return 1;
  return std::stoi(m[1].str());
}

bool pattern_matches(const std::string& pattern, const std::string& label) {
  static const std::map<std::string, std::regex> families = {{"je_i", std::regex(R"(^[12]e\d*$)")},
                                                             {"je", std::regex(R"(^[12]e$)")},
                                                             {"e_i", std::regex(R"(^e\d*$)")},
                                                             {"b_i", std::regex(R"(^b\d*$)")},
                                                             {"t_i", std::regex(R"(^t\d*$)")}};
  if (auto it = families.find(pattern); it != families.end()) return std::regex_match(label, it->second);
  if (const auto slash = pattern.find('/'); slash != std::string::npos)
    return pattern_matches(pattern.substr(0, slash), label) || pattern_matches(pattern.substr(slash + 1), label);
  return pattern == label;
}

std::string instantiate(std::string q, int m) {
  if (q.size() == 3 && q[1] == '_' && q[2] == 'M') return q.substr(0, 1) + std::to_string(m);
  return q;
}

void monodromy_groups(const Json& fx, TableResult& res) {
  const auto ns = fx.at("instantiate").at("N").get<std::vector<int>>();
  const auto& rows = fx.at("rows");
  std::vector<std::string> families;
  for (const auto& row : rows) {
    const auto s = row.at("symmetry").get<std::string>();
    if (std::find(families.begin(), families.end(), s) == families.end()) families.push_back(s);
  }
  for (const auto& fam : families) {
    std::vector<std::pair<int, std::string>> groups;
    if (fam == "C_N" || fam == "D_N") {
      for (int n : ns) groups.push_back({n, fam.substr(0, 1) + std::to_string(n)});
    } else {
      groups.push_back({0, fam});
    }
    for (const auto& [n, name] : groups) {
      const SymmetryGroup g = parse_group(name);
      std::vector<std::string> labels;
      if (g.is_finite()) {
        for (const auto& r : g.finite->irreps()) labels.push_back(r.label);
      } else {
        for (const auto& r : g.continuous->one_dim_irreps()) labels.push_back(r.label);
      }
      for (const auto& label : labels) {
        const Json* match = nullptr;
        for (const auto& row : rows)
          if (row.at("symmetry") == fam && pattern_matches(row.at("species").get<std::string>(), label)) {
            match = &row;
            break;
          }
        const std::string id = name + " " + label;
        if (!match) {
          res.cells.push_back({res.table, id, "row", "pattern row", "unmatched irrep", false});
          continue;
        }
        const int m = n > 0 ? std::gcd(n, label_index(label)) : 0;
        const auto mg = monodromy_group(g, label);
        const auto want_q = instantiate(match->at("quotient").get<std::string>(), m);
        res.cells.push_back({res.table, id, "G_mon", want_q, mg.quotient, want_q == mg.quotient});
        const bool want_na = match->at("non_abelian").get<bool>();
        res.cells.push_back({res.table, id, "non_abelian", want_na ? "true" : "false",
                             mg.non_abelian ? "true" : "false", want_na == mg.non_abelian});
        const auto want_r = match->at("reason").get<std::string>();
        const auto got_r = to_string(flatness_reason(g, label));
        res.cells.push_back({res.table, id, "flatness", want_r, got_r, want_r == got_r});
      }
    }
  }
}

}  // namespace

TableResult run_regression(const std::string& table, const std::string& fixture_dir) {
  const auto& known = regression_tables();
  if (std::find(known.begin(), known.end(), table) == known.end())
    throw InvalidArgument("unknown table '" + table + "'");
  const Json fx = load_fixture(fixture_dir, table);
  TableResult res;
  res.table = table;
  res.source = fixture_dir + "/" + table + ".json";
  res.tolerance = tolerance_text(fx.at("tolerance"));
  try {
    if (table == "buckeyball-mult")
      buckeyball_mult(fx, res);
    else if (table == "buckeyball-weights")
      buckeyball_weights(fx, res);
    else if (table == "fractions")
      fractions(fx, res);
    else if (table == "species")
      species(fx, res);
    else
      monodromy_groups(fx, res);
  } catch (const Json::exception& e) {
    throw InvalidArgument("malformed fixture " + res.source + ": " + e.what());
  }
  return res;
}

}  // namespace molsym::cli

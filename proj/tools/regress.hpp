#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace molsym::cli {

struct CellCheck {
  std::string table;
  std::string row;
  std::string column;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct TableResult {
  std::string table;
  std::string source;  // fixture file
  std::string tolerance;
  std::vector<CellCheck> cells;
  std::vector<CellCheck> invariants;  // derived checks that are not table cells

  int matched() const;
  bool passed() const;
};

const std::vector<std::string>& regression_tables();

/// $MOLSYM_FIXTURES, else the directory configured at build time.
std::string default_fixture_dir();

Json load_fixture(const std::string& dir, const std::string& table);

/// Throws InvalidArgument for an unknown table or a malformed fixture.
TableResult run_regression(const std::string& table, const std::string& fixture_dir);

}  // namespace molsym::cli

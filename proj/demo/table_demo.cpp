// Builds PSL(2,8) from the catalog, prints its character table mod p and the
// exact irrationalities of each row, then the verdict.

#include <iostream>

#include "rvdeg/rvdeg.hpp"

int main(int argc, char** argv) {
  const char* name = argc > 1 ? argv[1] : "PSL2_8";
  rvdeg::GroupAnalysis a(rvdeg::catalog::resolve(name));
  const auto& t = a.table();
  std::cout << rvdeg::format_table(t);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const auto row = a.exact(r);
    std::cout << "row " << r << (rvdeg::is_rational_row(row) ? " rational" : "")
              << (rvdeg::is_real_row(row) ? " real" : "") << '\n';
  }
  std::cout << rvdeg::to_text(rvdeg::build_report(a));
}

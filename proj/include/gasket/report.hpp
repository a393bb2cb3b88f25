#pragma once

// Line-oriented pass/fail report shared by the verification suites.

#include <cstddef>
#include <string>
#include <vector>

namespace gasket {

struct ReportLine {
  std::string check;
  bool pass;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<ReportLine> lines;
  bool ok() const;
  std::size_t failures() const;
  void add(std::string check, bool pass, std::string detail = {});
  std::string text() const;
};

}  // namespace gasket

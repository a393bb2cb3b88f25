#include "gasket/report.hpp"

#include <algorithm>
#include <sstream>

namespace gasket {

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const ReportLine& l) { return !l.pass; }));
}

void Report::add(std::string check, bool pass, std::string detail) {
  lines.push_back({std::move(check), pass, std::move(detail)});
}

std::string Report::text() const {
  std::ostringstream os;
  os << "# " << title << '\n';
  for (const auto& l : lines) {
    os << (l.pass ? "ok   " : "FAIL ") << l.check;
    if (!l.detail.empty()) os << "  " << l.detail;
    os << '\n';
  }
  os << "# " << lines.size() - failures() << '/' << lines.size() << " passed\n";
  return os.str();
}

}  // namespace gasket

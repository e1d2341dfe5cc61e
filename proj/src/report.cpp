#include "dpm/report.hpp"

#include <sstream>

#include <json.hpp>

namespace dpm {

int Report::passed() const {
  int n = 0;
  for (const auto& r : records) n += r.pass ? 1 : 0;
  return n;
}

int Report::failed() const { return static_cast<int>(records.size()) - passed(); }

std::string to_json(const std::vector<Report>& reports,
                    const std::string& graph_name, int vertices, int edges,
                    int faces, int genus) {
  nlohmann::ordered_json root;
  root["graph"] = {{"name", graph_name},
                   {"vertices", vertices},
                   {"edges", edges},
                   {"faces", faces},
                   {"genus", genus}};
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  int total_pass = 0, total_fail = 0;
  for (const auto& rep : reports) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& rec : rep.records) {
      checks.push_back({{"id", rec.id},
                        {"params", rec.params},
                        {"lhs", rec.lhs},
                        {"rhs", rec.rhs},
                        {"pass", rec.pass}});
    }
    suites.push_back({{"suite", rep.suite},
                      {"passed", rep.passed()},
                      {"failed", rep.failed()},
                      {"checks", std::move(checks)}});
    total_pass += rep.passed();
    total_fail += rep.failed();
  }
  root["suites"] = std::move(suites);
  root["summary"] = {{"passed", total_pass}, {"failed", total_fail}};
  return root.dump(2) + "\n";
}

std::string to_text(const std::vector<Report>& reports) {
  std::ostringstream os;
  int total_pass = 0, total_fail = 0;
  for (const auto& rep : reports) {
    os << "suite " << rep.suite << ": " << rep.passed() << " passed, "
       << rep.failed() << " failed\n";
    for (const auto& rec : rep.records) {
      if (rec.pass) continue;
      os << "  FAIL " << rec.id;
      if (!rec.params.empty()) os << " [" << rec.params << "]";
      os << " lhs=" << rec.lhs << " rhs=" << rec.rhs << "\n";
    }
    total_pass += rep.passed();
    total_fail += rep.failed();
  }
  os << "total: " << total_pass << " passed, " << total_fail << " failed\n";
  return os.str();
}

}  // namespace dpm

#ifndef DPM_REPORT_HPP
#define DPM_REPORT_HPP

#include <string>
#include <vector>

namespace dpm {

// One exact-equality check. pass is true iff lhs == rhs as exact values;
// both sides are serialized as exact rational strings.
struct CheckRecord {
  std::string id;
  std::string params;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  void add(std::string id, std::string params, std::string lhs,
           std::string rhs, bool pass) {
    records.push_back(CheckRecord{std::move(id), std::move(params),
                                  std::move(lhs), std::move(rhs), pass});
  }
  void add_equal(std::string id, std::string params, std::string lhs,
                 std::string rhs) {
    const bool ok = lhs == rhs;
    add(std::move(id), std::move(params), std::move(lhs), std::move(rhs), ok);
  }
  void merge(const Report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }
  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

std::string to_json(const std::vector<Report>& reports,
                    const std::string& graph_name, int vertices, int edges,
                    int faces, int genus);
std::string to_text(const std::vector<Report>& reports);

}  // namespace dpm

#endif

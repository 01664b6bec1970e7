#pragma once
#include <string>
#include <vector>

namespace specfac {

// Round through shortest-representation printing so exact JSON output is
// stable across platforms.
double round15(double x);
std::string format_double(double x);

struct CheckRecord {
  std::string harness;
  std::string params;    // JSON object fragment, e.g. {"s":1,"n":20,"alpha":0.5}
  std::string expected;  // JSON value as text
  std::string observed;  // JSON value as text
  bool pass = false;
  double tol = 0.0;
};

struct VerificationReport {
  std::string harness;
  long checked = 0;
  long passed = 0;
  long failed = 0;
  long skipped = 0;
  double wall_ms = 0.0;
  std::vector<CheckRecord> records;

  bool ok() const { return failed == 0 && checked > 0; }
  void add(CheckRecord r);
  void note_skip() { ++skipped; }
};

// One JSON object per line, appended to path.
void write_jsonl(const VerificationReport& rep, const std::string& path);
// One summary row per harness, appended to path (header written if new file).
void write_csv_summary(const VerificationReport& rep, const std::string& path);

}  // namespace specfac

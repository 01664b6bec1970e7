#include "specfac/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <sys/stat.h>

#include <json.hpp>

namespace specfac {

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void VerificationReport::add(CheckRecord r) {
  ++checked;
  if (r.pass)
    ++passed;
  else
    ++failed;
  records.push_back(std::move(r));
}

namespace {

nlohmann::json parse_fragment(const std::string& text) {
  if (text.empty()) return nullptr;
  return nlohmann::json::parse(text);
}

bool file_exists(const std::string& path) {
  struct stat st{};
  return ::stat(path.c_str(), &st) == 0;
}

}  // namespace

void write_jsonl(const VerificationReport& rep, const std::string& path) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path + " for append");
  for (const CheckRecord& r : rep.records) {
    nlohmann::json line = {
        {"harness", r.harness.empty() ? rep.harness : r.harness},
        {"params", parse_fragment(r.params)},
        {"expected", parse_fragment(r.expected)},
        {"observed", parse_fragment(r.observed)},
        {"pass", r.pass},
        {"tol", round15(r.tol)},
    };
    out << line.dump() << '\n';
  }
}

void write_csv_summary(const VerificationReport& rep, const std::string& path) {
  const bool fresh = !file_exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path + " for append");
  if (fresh) out << "harness,checked,passed,failed,skipped,wall_ms\n";
  out << rep.harness << ',' << rep.checked << ',' << rep.passed << ','
      << rep.failed << ',' << rep.skipped << ',' << format_double(round15(rep.wall_ms))
      << '\n';
}

}  // namespace specfac

#include "anncat/report.hpp"

#include <sstream>

namespace anncat {

bool AxiomReport::pass() const {
  for (const auto& [k, r] : aux)
    if (!r.pass()) return false;
  for (const auto& [k, r] : diagrams)
    if (!r.pass()) return false;
  return true;
}

long long AxiomReport::total_failures() const {
  long long n = 0;
  for (const auto& [k, r] : aux) n += static_cast<long long>(r.violations.size());
  for (const auto& [k, r] : diagrams) n += r.failure_count;
  return n;
}

const EquationCheckResult* AxiomReport::find(const std::string& key) const {
  for (const auto& [k, r] : diagrams)
    if (k == key) return &r;
  return nullptr;
}

void AxiomReport::append(AxiomReport other) {
  for (auto& p : other.aux) aux.push_back(std::move(p));
  for (auto& p : other.diagrams) diagrams.push_back(std::move(p));
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "  [" << (r.pass() ? "ok" : "FAIL") << "] " << r.subject << ": "
     << r.checks << " checks, " << r.violations.size() << " violations\n";
  for (const auto& v : r.violations)
    os << "      violated " << v.rule << " at " << v.witness << "\n";
  return os.str();
}

std::string render_text(const EquationCheckResult& r) {
  std::ostringstream os;
  os << "  [" << (r.pass() ? "ok" : "FAIL") << "] (" << r.id << ") "
     << r.instances << " instances";
  if (r.bounded) os << " (bounded)";
  if (r.failure_count) os << ", " << r.failure_count << " failures";
  os << "  " << r.cite << "\n";
  for (const auto& f : r.failures)
    os << "      " << f.kind << " at {" << f.binding << "}: lhs=" << f.lhs
       << " rhs=" << f.rhs << "\n";
  return os.str();
}

std::string render_text(const AxiomReport& r) {
  std::ostringstream os;
  for (const auto& [k, rep] : r.aux) os << render_text(rep);
  for (const auto& [k, res] : r.diagrams) os << render_text(res);
  os << (r.pass() ? "PASS" : "FAIL") << " (" << r.total_failures()
     << " failures)\n";
  return os.str();
}

std::string render_machine(const AxiomReport& r) {
  std::ostringstream os;
  for (const auto& [k, rep] : r.aux) {
    os << "V|" << k << "|checks=" << rep.checks
       << "|violations=" << rep.violations.size() << "|"
       << (rep.pass() ? "pass" : "fail") << "\n";
    for (const auto& v : rep.violations)
      os << "W|" << k << "|" << v.rule << "|" << v.witness << "\n";
  }
  for (const auto& [k, res] : r.diagrams) {
    os << "D|" << k << "|" << res.cite << "|vars=" << res.num_vars
       << "|instances=" << res.instances << "|failures=" << res.failure_count
       << "|" << (res.pass() ? "pass" : "fail")
       << (res.bounded ? "|bounded" : "") << "\n";
    for (const auto& f : res.failures)
      os << "F|" << k << "|" << f.binding << "|lhs=" << f.lhs
         << "|rhs=" << f.rhs << "|" << f.kind << "\n";
  }
  os << "S|" << (r.pass() ? "pass" : "fail")
     << "|failures=" << r.total_failures() << "\n";
  return os.str();
}

}  // namespace anncat

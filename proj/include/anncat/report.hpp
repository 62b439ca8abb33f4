#pragma once

#include <string>
#include <utility>
#include <vector>

#include "anncat/base.hpp"

namespace anncat {

// Outcome of a table-level validation scan (category laws, bifunctor
// interchange, family naturality...).  Violations are data, not errors;
// witnesses are the first offenders in canonical enumeration order.
struct Violation {
  std::string rule;
  std::string witness;
};

struct Report {
  std::string subject;
  long long checks = 0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

// Outcome of checking one universally quantified equation by full
// enumeration of variable bindings.
struct EquationCheckResult {
  std::string id;
  std::string cite;
  int num_vars = 0;
  long long instances = 0;
  bool bounded = false;  // universe was a probe set, not the whole category

  struct Failure {
    long long binding_index = 0;   // canonical (mixed-radix) position
    std::string binding;           // "X=a,Y=b"
    std::string lhs, rhs;          // content names of the two composites
    std::string kind;              // "mismatch" | "endpoint" | "ill-typed"
  };
  std::vector<Failure> failures;   // first few, by binding_index
  long long failure_count = 0;     // total, may exceed failures.size()

  bool pass() const { return failure_count == 0; }
};

// Grouped results for a whole verification run (verify_ann, functor
// checks, pipelines).  Diagrams keep catalog order; aux carries
// table-level validations and precondition scans.
struct AxiomReport {
  std::vector<std::pair<std::string, Report>> aux;
  std::vector<std::pair<std::string, EquationCheckResult>> diagrams;

  bool pass() const;
  long long total_failures() const;
  const EquationCheckResult* find(const std::string& key) const;
  void append(AxiomReport other);
};

// Rendering.  The machine format is line-delimited and contains no
// timestamps or addresses, so byte-identical runs are reproducible.
std::string render_text(const AxiomReport& r);
std::string render_machine(const AxiomReport& r);
std::string render_text(const Report& r);
std::string render_text(const EquationCheckResult& r);

}  // namespace anncat

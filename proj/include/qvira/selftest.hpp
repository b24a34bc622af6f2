#pragma once

#include <ostream>

namespace qvira {

/// Runs the acceptance criteria, printing one "PASS"/"FAIL" line each.
/// Returns true when every criterion passes.
bool run_acceptance(std::ostream& out);

}  // namespace qvira

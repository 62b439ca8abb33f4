#pragma once

#include <vector>

#include "anncat/term.hpp"

namespace anncat {

// The shipped equation catalog.  Every entry carries the diagram key it
// is checked under plus a one-line citation label used in reports.
const Equation& catalog(const std::string& id);
const std::vector<Equation>& full_catalog();

// Canonical groups.
std::vector<std::string> catalog_pic_ids();        // 2.1+, 2.2+, c.inv, 2.5+
std::vector<std::string> catalog_au_ids();         // 2.1, 2.2
std::vector<std::string> catalog_ann2_ids();       // 2.10, 2.10', 2.11, 2.12
std::vector<std::string> catalog_ann3_ids();       // 2.13, 2.13'
std::vector<std::string> catalog_zero_ids();       // 3.1.*, 3.2.*
std::vector<std::string> catalog_ac_functor_ids(); // 2.3+, 2.6+
std::vector<std::string> catalog_au_functor_ids(); // 2.3x, 2.4x, 2.4'x
std::vector<std::string> catalog_ann_functor_ids();// 2.3+, 2.6+, 2.3x, 2.15, 2.15'

}  // namespace anncat

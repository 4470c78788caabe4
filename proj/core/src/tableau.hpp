#pragma once

#include "dlp/ontology.hpp"

namespace dlp::detail {

/// Satisfiability of the TBox and ABox, ignoring equality assertions
/// (those are resolved by the caller under the unique name assumption).
bool tableau_satisfiable(const Ontology& o);

}  // namespace dlp::detail

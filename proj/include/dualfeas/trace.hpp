#pragma once

#include "dualfeas/outcome.hpp"
#include "dualfeas/tableau.hpp"

#include <string>

namespace dualfeas {

/// Cosine with three decimals, as shown next to the dictionaries in traces.
std::string format_cosine(double cosine);

/// Plain-text table (float cells to 6 significant digits): nonbasic labels across, the objective row "0" first, then
/// one row per basic label. With `cosines`, a trailing column shows the cosine
/// of each resisting row and marks the maximum.
template <class T>
std::string format_dictionary(const Dictionary<T>& dict, const CosineTable* cosines = nullptr,
                              int selected = 0);

/// Step-by-step account of a traced run. Needs snapshots in the records.
template <class T>
std::string format_trace(const SolveOutcome<T>& outcome);

}  // namespace dualfeas

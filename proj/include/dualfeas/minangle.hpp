#pragma once

// Minimum-angle route to dual feasibility.
//
// Each pass collapses all improving edges of the dictionary into a single one
// by adding a driving variable x_r = -sum_{j in L} d_0j x_j (the SIE, or
// single improving edge, transformation), then exchanges x_r against the
// resisting constraint whose h-vector makes the smallest angle with the
// surviving edge. The driving row is dropped again afterwards, so the
// dictionary keeps its original shape from pass to pass.

#include "dualfeas/outcome.hpp"
#include "dualfeas/tableau.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dualfeas {

class DegenerateSie : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ZeroRow : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Cosines closer than this are treated as equal; the smaller label wins.
inline constexpr double kCosineTieTolerance = 1e-9;

struct SieContext {
  int driving = 0;
  int main_direction = 0;
  std::vector<int> improving;
  bool inserted = false;
};

/// Nonbasic labels with a negative objective entry, in ascending label order.
template <class T>
std::vector<int> improving_set(const Dictionary<T>& dict);

/// Member of L with the most negative objective entry; ties go to the smaller label.
template <class T>
int main_direction(const Dictionary<T>& dict, std::span<const int> improving);

/// Adds the driving row (0 | d_0j for j in L, 0 elsewhere) and pivots it
/// against l. Afterwards the driving label is the only improving column and
/// its objective entry is exactly -1.
///
/// Throws DegenerateSie when |L| <= 1.
template <class T>
std::pair<Dictionary<T>, SieContext> sie_transform(const Dictionary<T>& dict,
                                                   std::span<const int> improving, int l);

/// Cosine between the h-vector of basic row k and the edge along nonbasic r:
/// d_kr / ||d_kN||. Throws ZeroRow when the row norm is within eps of zero.
template <class T>
double cosine(const Dictionary<T>& dict, int k, int r);

/// Basic labels whose coefficient in column r is positive, ascending.
template <class T>
std::vector<int> resisting_set(const Dictionary<T>& dict, int r);

template <class T>
CosineTable cosine_table(const Dictionary<T>& dict, std::span<const int> resisting, int r);

/// The most contrary constraint among `resisting` for edge r.
template <class T>
int most_contrary(const Dictionary<T>& dict, std::span<const int> resisting, int r);

template <class T>
struct MinAngleStep {
  enum class Kind { AlreadyDualFeasible, Pivoted, DualInconsistent };

  Kind kind = Kind::AlreadyDualFeasible;
  Dictionary<T> dict;
  StepRecord<T> record;
  /// Unresisted improving column for DualInconsistent.
  int witness = 0;
};

/// One pass of the minimum-angle rule. On DualInconsistent the returned
/// dictionary still carries the driving row, whose column certifies the ray.
template <class T>
MinAngleStep<T> minangle_iteration(const Dictionary<T>& dict, bool snapshots = false);

template <class T>
SolveOutcome<T> attain_dual_feasibility_minangle(const Dictionary<T>& dict, const Limits& limits = {});

}  // namespace dualfeas

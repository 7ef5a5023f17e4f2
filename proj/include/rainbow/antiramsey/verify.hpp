#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/antiramsey/ar_search.hpp"
#include "rainbow/core/hypergraph.hpp"
#include "rainbow/turan/checks.hpp"
#include "rainbow/turan/record.hpp"

namespace rainbow::antiramsey {

enum class IdentityVerdict { Holds, Fails, OutOfRange };
std::string_view identity_verdict_name(IdentityVerdict v);

struct IdentityReport {
  int n = 0;
  int t = 0;
  int ar = 0;     // ar(n, (t+1)F)
  int ex = 0;     // ex(n, tF)
  int t_max = 0;  // from the edge-sensitivity gap
  bool identity = false;     // ar == ex + 2
  bool lower_bound = false;  // ar >= ex + 2, which holds for every t
  IdentityVerdict verdict = IdentityVerdict::OutOfRange;

  // A failure inside the range or of the unconditional lower bound.
  bool violation() const { return verdict == IdentityVerdict::Fails || !lower_bound; }
};

// ar(n,(t+1)F) = ex(n,tF) + 2 for 1 <= t <= t_max. `ar_next` must be the
// exact record for (t+1)F and `tf` the table for the family {tF}. Outside
// the range the identity is compared but reported as out-of-range.
IdentityReport verify_identity_thm15(int n, int t, const HyperGraph& f, const ArRecord& ar_next,
                                     const turan::TuranTable& tf, const turan::GapReport& gap);

struct SandwichReport {
  int n = 0;
  int t = 0;  // the record's t: the target is tF
  int ar = 0;
  std::optional<int> ex_below;  // ex(n, (t-1)F), absent for t = 1
  int ex_at = 0;                // ex(n, tF)
  bool lower = true;            // ex(n,(t-1)F) + 2 <= ar(n,tF)
  bool upper = true;            // ar(n,tF) <= ex(n,tF) + 1
  bool holds() const { return lower && upper; }
};

// Both inequalities of ex(n,(t-1)F) + 2 <= ar(n,tF) <= ex(n,tF) + 1 for an
// exact record of ar(n, tF). For t = 1 only the upper one applies.
SandwichReport check_sandwich(const ArRecord& ar, std::optional<int> ex_below, int ex_at);

struct ReductionReport {
  int n = 0;
  int t = 0;
  int ar_big = 0;     // ar(n, (t+2)F)
  int ar_small = 0;   // ar(n-t, 2F)
  std::uint64_t crossing = 0;  // C(n, r) - C(n-t, r)
  bool holds = false;          // ar_big >= crossing + ar_small
};

// ar(n,(t+2)F) >= C(n,r) - C(n-t,r) + ar(n-t,2F) from two exact records.
ReductionReport check_reduction(const ArRecord& big, const ArRecord& small, int r);

struct Census {
  turan::Rational threshold;  // d(n,F) + (1-pi)/(7m) C(n-1, r-1)
  std::vector<Vertex> high;   // vertices of H with degree >= threshold
};

Census stability_degree_census(const HyperGraph& h, const HyperGraph& f, const turan::Rational& pi,
                               const turan::TuranTable& table);

}  // namespace rainbow::antiramsey

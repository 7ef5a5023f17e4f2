#include "rainbow/antiramsey/verify.hpp"

#include "rainbow/core/errors.hpp"
#include "rainbow/core/family.hpp"

namespace rainbow::antiramsey {

std::string_view identity_verdict_name(IdentityVerdict v) {
  switch (v) {
    case IdentityVerdict::Holds:
      return "holds";
    case IdentityVerdict::Fails:
      return "fails";
    default:
      return "out-of-range";
  }
}

IdentityReport verify_identity_thm15(int n, int t, const HyperGraph& f, const ArRecord& ar_next,
                                     const turan::TuranTable& tf, const turan::GapReport& gap) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (ar_next.n != n || ar_next.t != t + 1) throw InvalidArgument("AR record is not ar(n, (t+1)F)");
  if (ar_next.f_key != graph_key(f)) throw InvalidArgument("AR record belongs to another F");
  if (!ar_next.exact()) throw MissingRecord("AR record is not exact");
  if (gap.n != n) throw InvalidArgument("gap report is for another n");
  IdentityReport out;
  out.n = n;
  out.t = t;
  out.ar = ar_next.value;
  out.ex = tf.exact(n);
  out.t_max = gap.t_max;
  out.identity = out.ar == out.ex + 2;
  out.lower_bound = out.ar >= out.ex + 2;
  if (t > gap.t_max) out.verdict = IdentityVerdict::OutOfRange;
  else out.verdict = out.identity ? IdentityVerdict::Holds : IdentityVerdict::Fails;
  return out;
}

SandwichReport check_sandwich(const ArRecord& ar, std::optional<int> ex_below, int ex_at) {
  if (!ar.exact()) throw MissingRecord("AR record is not exact");
  if (ar.t > 1 && !ex_below) throw MissingRecord("ex(n, (t-1)F) is needed for t > 1");
  SandwichReport out;
  out.n = ar.n;
  out.t = ar.t;
  out.ar = ar.value;
  out.ex_at = ex_at;
  if (ar.t > 1) {
    out.ex_below = ex_below;
    out.lower = *ex_below + 2 <= ar.value;
  }
  out.upper = ar.value <= ex_at + 1;
  return out;
}

ReductionReport check_reduction(const ArRecord& big, const ArRecord& small, int r) {
  if (!big.exact() || !small.exact()) throw MissingRecord("both AR records must be exact");
  const int t = big.t - 2;
  if (t < 0 || small.t != 2 || small.n != big.n - t || big.f_key != small.f_key) {
    throw InvalidArgument("records are not ar(n,(t+2)F) and ar(n-t,2F)");
  }
  ReductionReport out;
  out.n = big.n;
  out.t = t;
  out.ar_big = big.value;
  out.ar_small = small.value;
  out.crossing = binomial(big.n, r) - binomial(big.n - t, r);
  out.holds = static_cast<std::uint64_t>(big.value) >= out.crossing + static_cast<std::uint64_t>(small.value);
  return out;
}

Census stability_degree_census(const HyperGraph& h, const HyperGraph& f, const turan::Rational& pi,
                               const turan::TuranTable& table) {
  if (pi < 0 || pi > 1) throw InvalidArgument("pi must lie in [0, 1]");
  const int n = h.order(), r = h.uniformity();
  if (f.uniformity() != r) throw InvalidArgument("uniformity mismatch");
  Census out;
  out.threshold = turan::average_degree(table, n, r) +
                  (turan::Rational(1) - pi) / (7 * f.order()) * turan::binomial_q(n - 1, r - 1);
  for (Vertex v = 0; v < n; ++v) {
    if (turan::Rational(h.degree(v)) >= out.threshold) out.high.push_back(v);
  }
  return out;
}

}  // namespace rainbow::antiramsey

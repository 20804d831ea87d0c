#ifndef CHARTLAB_EQ_HPP
#define CHARTLAB_EQ_HPP

#include <cstdint>
#include <string>

#include "chartlab/scalar.hpp"

namespace chartlab::sym {

enum class EqResult { Equal, ProbablyEqual, NotEqual };

/// Three-valued outcome of a verification step. ProbablyEqual from
/// eq_check surfaces as Inconclusive, never as a silent yes.
enum class Tri { Yes, No, Inconclusive };

inline Tri combine(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Inconclusive || b == Tri::Inconclusive) return Tri::Inconclusive;
  return Tri::Yes;
}

const char* to_cstr(EqResult r);
const char* to_cstr(Tri t);

/// Randomized-evaluation settings for eq_check. Points are sampled
/// uniformly in [-1,1] as rationals with bounded denominator, so runs
/// are reproducible from the seed alone.
struct RandomPointConfig {
  std::uint64_t seed = 2024;
  int points = 64;
  long max_denominator = 1 << 16;
  double tolerance = 1e-9;
  int max_retries = 8;
};

/// Decides equality of two scalars. Equal means identical normal forms
/// (sound); NotEqual means a sampled evaluation separated them; otherwise
/// the normal forms differ but all samples agree, which is reported as
/// ProbablyEqual (trig identities outside the rewrite set land here).
EqResult eq_check(const ScalarExpr& a, const ScalarExpr& b,
                  const RandomPointConfig& cfg = RandomPointConfig{});

inline Tri eq_as_tri(EqResult r) {
  switch (r) {
    case EqResult::Equal: return Tri::Yes;
    case EqResult::NotEqual: return Tri::No;
    default: return Tri::Inconclusive;
  }
}

} // namespace chartlab::sym

#endif

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "outerstring/geom.hpp"

namespace outerstring {

enum class GenKind { Segments, Polylines, Figure };

GenKind parse_gen_kind(std::string_view text);

struct GenSpec {
  GenKind kind = GenKind::Segments;
  std::size_t n = 1;
  std::size_t bends = 2;
  std::uint64_t seed = 0;
  std::int64_t grid = 20;
};

/// Seeded generator whose outputs depend only on the seed (no std distributions,
/// whose algorithms differ between standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform rational in [lo, hi] with the given denominator.
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t denominator);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// n grounded segments with distinct integer basepoints, perturbed into general position.
/// Throws Error(GenerationFailure) if perturbation does not converge.
CurveFamily random_grounded_segments(const GenSpec& spec);

/// Simple grounded polylines with up to `bends` vertices each.
CurveFamily random_grounded_polylines(const GenSpec& spec);

/// Dispatch on spec.kind; for figures, n selects the frozen figure fixture.
CurveFamily generate(const GenSpec& spec);

/// True iff no two segments of the curve share a point other than a common vertex of consecutive segments.
bool is_simple(const GroundedCurve& c);

}  // namespace outerstring

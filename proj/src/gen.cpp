#include "outerstring/gen.hpp"

#include <algorithm>
#include <string>

#include "outerstring/figures.hpp"
#include "segment.hpp"

namespace outerstring {

namespace {

constexpr int kPerturbRounds = 40;
constexpr int kShapeAttempts = 200;

Rational micro() { return Rational(1, 1000000); }

std::vector<std::int64_t> distinct_basepoints(Rng& rng, std::size_t n, std::int64_t grid) {
  const std::int64_t range = std::max<std::int64_t>(grid, static_cast<std::int64_t>(n));
  std::vector<std::int64_t> pool(static_cast<std::size_t>(range + 1));
  for (std::int64_t i = 0; i <= range; ++i) pool[static_cast<std::size_t>(i)] = i;
  // partial Fisher-Yates
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(n);
  return pool;
}

CurveFamily settle(std::vector<GroundedCurve> curves, Rng& rng) {
  const std::size_t n = curves.size();
  for (int round = 0; round <= kPerturbRounds; ++round) {
    if (round > 0) {
      // distinct small shifts i/(n+1) * 1e-6, scaled by a seeded factor so rounds differ
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j < curves[i].vertices.size(); ++j) {
          auto& v = curves[i].vertices[j];
          const Rational shift = Rational(static_cast<long>(i + 1), static_cast<long>(n + 1)) * micro();
          v.x += shift * Rational(static_cast<long>(rng.between(1, 97)));
          v.y += shift * Rational(static_cast<long>(rng.between(1, 89)), 7);
        }
      }
    }
    std::vector<const GroundedCurve*> ptrs;
    for (const auto& c : curves) ptrs.push_back(&c);
    if (check_curves(ptrs).empty() &&
        std::all_of(curves.begin(), curves.end(), [](const GroundedCurve& c) { return is_simple(c); }))
      return validate_family(std::move(curves));
  }
  throw Error(ErrorKind::GenerationFailure, "no general-position perturbation found");
}

void check_spec(const GenSpec& spec) {
  if (spec.n < 1) throw Error(ErrorKind::GenerationFailure, "n must be at least 1");
  if (spec.bends < 2) throw Error(ErrorKind::GenerationFailure, "bends must be at least 2");
  if (spec.grid < 1) throw Error(ErrorKind::GenerationFailure, "grid must be positive");
}

}  // namespace

GenKind parse_gen_kind(std::string_view text) {
  if (text == "segments") return GenKind::Segments;
  if (text == "polylines") return GenKind::Polylines;
  if (text == "figure") return GenKind::Figure;
  throw Error(ErrorKind::ParseError, "unknown generator kind '" + std::string(text) + "'");
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // rejection sampling keeps the result unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r = 0;
  do r = next();
  while (r >= limit);
  return r % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::rational(std::int64_t lo, std::int64_t hi, std::int64_t denominator) {
  const std::int64_t k = between(lo * denominator, hi * denominator);
  Rational q(static_cast<long>(k), static_cast<long>(denominator));
  q.canonicalize();
  return q;
}

bool is_simple(const GroundedCurve& c) {
  const auto n = c.segment_count();
  for (std::size_t i = 0; i < n; ++i)
    if (c.vertices[i] == c.vertices[i + 1]) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto m = detail::meet(c.vertices[i], c.vertices[i + 1], c.vertices[j], c.vertices[j + 1]);
      if (m.kind == detail::MeetKind::None) continue;
      if (m.kind == detail::MeetKind::Overlap) return false;
      if (j == i + 1 && m.t == 1 && m.u == 0) continue;
      return false;
    }
  }
  return true;
}

CurveFamily random_grounded_segments(const GenSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  auto bases = distinct_basepoints(rng, spec.n, spec.grid);
  std::vector<GroundedCurve> curves;
  for (std::size_t i = 0; i < spec.n; ++i) {
    GroundedCurve c{"c" + std::to_string(i + 1), {}};
    c.vertices.push_back(Point{Rational(static_cast<long>(bases[i])), Rational(0)});
    c.vertices.push_back(Point{Rational(static_cast<long>(rng.between(0, spec.grid))),
                               Rational(static_cast<long>(rng.between(1, spec.grid)))});
    curves.push_back(std::move(c));
  }
  return settle(std::move(curves), rng);
}

CurveFamily random_grounded_polylines(const GenSpec& spec) {
  check_spec(spec);
  Rng rng(spec.seed);
  auto bases = distinct_basepoints(rng, spec.n, spec.grid);
  std::vector<GroundedCurve> curves;
  for (std::size_t i = 0; i < spec.n; ++i) {
    const std::size_t count = 2 + static_cast<std::size_t>(rng.below(spec.bends - 1));
    GroundedCurve c{"c" + std::to_string(i + 1), {}};
    for (int attempt = 0; attempt < kShapeAttempts; ++attempt) {
      c.vertices.assign(1, Point{Rational(static_cast<long>(bases[i])), Rational(0)});
      // the first segment rises at most one grid step sideways
      c.vertices.push_back(Point{Rational(static_cast<long>(bases[i] + rng.between(-1, 1))),
                                 Rational(static_cast<long>(rng.between(1, spec.grid)))});
      while (c.vertices.size() < count)
        c.vertices.push_back(Point{Rational(static_cast<long>(rng.between(0, spec.grid))),
                                   Rational(static_cast<long>(rng.between(1, spec.grid)))});
      if (is_simple(c)) break;
    }
    if (!is_simple(c)) throw Error(ErrorKind::GenerationFailure, "could not draw a simple curve");
    curves.push_back(std::move(c));
  }
  return settle(std::move(curves), rng);
}

CurveFamily generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::Segments:
      return random_grounded_segments(spec);
    case GenKind::Polylines:
      return random_grounded_polylines(spec);
    case GenKind::Figure:
      if (spec.n < 1 || spec.n > 4) throw Error(ErrorKind::GenerationFailure, "figure number must be 1 to 4");
      return figure_fixture(static_cast<int>(spec.n)).family;
  }
  throw Error(ErrorKind::GenerationFailure, "unknown kind");
}

}  // namespace outerstring

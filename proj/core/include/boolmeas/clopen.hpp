#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "boolmeas/rational.hpp"

namespace boolmeas {

// Half-open interval [lo, hi) with 0 <= lo < hi <= 1.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// A finite union of rational half-open subintervals of [0,1), kept in
// canonical form: sorted, pairwise disjoint, and maximally merged, so that
// set equality is representation equality. The empty list is 0 and
// [(0,1)] is 1.
class ClopenSet {
 public:
  ClopenSet() = default;

  static ClopenSet unit();
  static ClopenSet interval(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  bool is_zero() const noexcept { return intervals_.empty(); }
  bool is_unit() const;
  bool contains(const Rational& x) const;

  friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

 private:
  friend ClopenSet normalize(std::span<const Interval> raw);
  friend ClopenSet from_canonical(std::vector<Interval> intervals);
  explicit ClopenSet(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}

  std::vector<Interval> intervals_;
};

// Depth-g dyadic interval [index * 2^-g, (index + 1) * 2^-g).
struct DyadicCylinder {
  unsigned depth = 0;
  std::uint64_t index = 0;

  friend bool operator==(const DyadicCylinder&, const DyadicCylinder&) = default;
};

inline constexpr unsigned kMaxCylinderDepth = 62;

// Canonical union of `raw`. Throws ValidationError naming the position of
// the first pair with lo >= hi or an endpoint outside [0,1].
ClopenSet normalize(std::span<const Interval> raw);

enum class BoolOp { meet, join, complement, symmetric_difference };

// `b` is ignored for complement and required otherwise.
ClopenSet combine(BoolOp op, const ClopenSet& a, const std::optional<ClopenSet>& b = std::nullopt);

ClopenSet meet(const ClopenSet& a, const ClopenSet& b);
ClopenSet join(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);
ClopenSet symmetric_difference(const ClopenSet& a, const ClopenSet& b);
bool leq(const ClopenSet& a, const ClopenSet& b);
bool disjoint(const ClopenSet& a, const ClopenSet& b);

// Lebesgue measure: total length.
Rational lambda_measure(const ClopenSet& a);

// Frechet-Nikodym distance lambda(a xor b).
Rational fn_distance(const ClopenSet& a, const ClopenSet& b);

// Preimage of `a` under n iterations of the doubling map x -> 2x mod 1.
// Materializes 2^n copies, so n is capped at kMaxShiftMaterialize.
inline constexpr unsigned kMaxShiftMaterialize = 20;
ClopenSet shift_preimage(const ClopenSet& a, unsigned n);

// lambda(T^-n a meet b) computed without materializing T^-n a; works for
// any n up to kMaxCylinderDepth.
Rational shifted_meet_measure(const ClopenSet& a, unsigned n, const ClopenSet& b);

// Image of `a` under the involution that flips binary digit n (0-based,
// digit 0 is the first digit after the point), i.e. swaps the two halves
// of every depth-n dyadic interval.
ClopenSet bit_flip(const ClopenSet& a, unsigned n);

// Depth-g cylinders whose union is `a`. Throws ValidationError naming the
// first endpoint that is not a multiple of 2^-g.
std::vector<DyadicCylinder> dyadic_refine(const ClopenSet& a, unsigned g);

ClopenSet cylinder_set(const DyadicCylinder& c);

// {x : binary digit n of x is 1}; this set has 2^n intervals.
ClopenSet digit_set(unsigned n);

// Smallest g such that every endpoint is a multiple of 2^-g, or nullopt if
// some endpoint is not dyadic.
std::optional<unsigned> dyadic_depth(const ClopenSet& a);

}  // namespace boolmeas

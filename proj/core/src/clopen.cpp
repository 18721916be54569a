#include "boolmeas/clopen.hpp"

#include <algorithm>
#include <string>

#include "boolmeas/error.hpp"

namespace boolmeas {

ClopenSet from_canonical(std::vector<Interval> intervals) {
  return ClopenSet(std::move(intervals));
}

namespace {

// Sorts and merges intervals already known to be well formed.
ClopenSet merge_sorted(std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  out.reserve(pieces.size());
  for (auto& p : pieces) {
    if (!out.empty() && p.lo <= out.back().hi) {
      if (p.hi > out.back().hi) out.back().hi = std::move(p.hi);
    } else {
      out.push_back(std::move(p));
    }
  }
  return from_canonical(std::move(out));
}

}  // namespace

ClopenSet ClopenSet::unit() { return ClopenSet({Interval{Rational(0), Rational(1)}}); }

ClopenSet ClopenSet::interval(const Rational& lo, const Rational& hi) {
  const Interval raw{lo, hi};
  return normalize(std::span<const Interval>(&raw, 1));
}

bool ClopenSet::is_unit() const {
  return intervals_.size() == 1 && intervals_[0].lo == 0 && intervals_[0].hi == 1;
}

bool ClopenSet::contains(const Rational& x) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), x,
                             [](const Rational& v, const Interval& i) { return v < i.lo; });
  if (it == intervals_.begin()) return false;
  --it;
  return x >= it->lo && x < it->hi;
}

ClopenSet normalize(std::span<const Interval> raw) {
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& p = raw[i];
    if (p.lo < 0 || p.hi > 1 || p.lo >= p.hi) {
      throw ValidationError("[" + std::to_string(i) + "]",
                            "malformed interval (" + to_string(p.lo) + ", " + to_string(p.hi) +
                                "): need 0 <= lo < hi <= 1");
    }
  }
  return merge_sorted(std::vector<Interval>(raw.begin(), raw.end()));
}

ClopenSet meet(const ClopenSet& a, const ClopenSet& b) {
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const Rational& lo = std::max(x[i].lo, y[j].lo);
    const Rational& hi = std::min(x[i].hi, y[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x[i].hi < y[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  // Pieces of disjoint merged inputs cannot touch, so no further merging.
  return from_canonical(std::move(out));
}

ClopenSet join(const ClopenSet& a, const ClopenSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return merge_sorted(std::move(all));
}

ClopenSet complement(const ClopenSet& a) {
  std::vector<Interval> out;
  Rational cursor = 0;
  for (const auto& i : a.intervals()) {
    if (cursor < i.lo) out.push_back({cursor, i.lo});
    cursor = i.hi;
  }
  if (cursor < 1) out.push_back({cursor, Rational(1)});
  return from_canonical(std::move(out));
}

ClopenSet symmetric_difference(const ClopenSet& a, const ClopenSet& b) {
  return join(meet(a, complement(b)), meet(complement(a), b));
}

bool leq(const ClopenSet& a, const ClopenSet& b) { return meet(a, b) == a; }

bool disjoint(const ClopenSet& a, const ClopenSet& b) { return meet(a, b).is_zero(); }

ClopenSet combine(BoolOp op, const ClopenSet& a, const std::optional<ClopenSet>& b) {
  if (op == BoolOp::complement) return complement(a);
  if (!b) throw ValidationError("binary operation requires a second operand");
  switch (op) {
    case BoolOp::meet:
      return meet(a, *b);
    case BoolOp::join:
      return join(a, *b);
    case BoolOp::symmetric_difference:
      return symmetric_difference(a, *b);
    case BoolOp::complement:
      break;
  }
  return complement(a);
}

Rational lambda_measure(const ClopenSet& a) {
  Rational total = 0;
  for (const auto& i : a.intervals()) total += i.hi - i.lo;
  return total;
}

Rational fn_distance(const ClopenSet& a, const ClopenSet& b) {
  return lambda_measure(symmetric_difference(a, b));
}

ClopenSet shift_preimage(const ClopenSet& a, unsigned n) {
  if (n == 0 || a.is_zero() || a.is_unit()) return a;
  if (n > kMaxShiftMaterialize) {
    throw CapExceeded("shift_preimage: n = " + std::to_string(n) + " exceeds materialization cap " +
                      std::to_string(kMaxShiftMaterialize));
  }
  const std::uint64_t copies = std::uint64_t{1} << n;
  const Rational scale = dyadic(n);
  std::vector<Interval> out;
  out.reserve(copies * a.intervals().size());
  for (std::uint64_t k = 0; k < copies; ++k) {
    const Rational shift = Rational(k) * scale;
    for (const auto& i : a.intervals()) {
      out.push_back({i.lo * scale + shift, i.hi * scale + shift});
    }
  }
  return merge_sorted(std::move(out));
}

namespace {

// Length of (union over k >= 0 of [lo + k, hi + k)) meet [0, x), x >= 0.
Rational periodic_mass(const Interval& j, const Rational& x) {
  const Rational whole = floor(x);
  const Rational frac = x - whole;
  const Rational len = j.hi - j.lo;
  Rational partial = frac - j.lo;
  if (partial < 0) partial = 0;
  if (partial > len) partial = len;
  return whole * len + partial;
}

}  // namespace

Rational shifted_meet_measure(const ClopenSet& a, unsigned n, const ClopenSet& b) {
  if (n > kMaxCylinderDepth) {
    throw CapExceeded("shifted_meet_measure: n = " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxCylinderDepth));
  }
  // T^-n a = union over k < 2^n of (a + k) / 2^n; rescale b by 2^n instead.
  const Rational s = Rational(pow2(n));
  Rational total = 0;
  for (const auto& i : b.intervals()) {
    const Rational lo = i.lo * s;
    const Rational hi = i.hi * s;
    for (const auto& j : a.intervals()) {
      total += periodic_mass(j, hi) - periodic_mass(j, lo);
    }
  }
  return total / s;
}

ClopenSet bit_flip(const ClopenSet& a, unsigned n) {
  if (n > kMaxCylinderDepth) {
    throw CapExceeded("bit_flip: digit " + std::to_string(n) + " exceeds " +
                      std::to_string(kMaxCylinderDepth));
  }
  const Rational width = dyadic(n);
  const Rational half = dyadic(n + 1);
  std::vector<Interval> out;

  // Piece [p, q) inside the depth-n cylinder starting at c.
  auto flip_piece = [&](const Rational& p, const Rational& q, const Rational& c) {
    const Rational mid = c + half;
    if (p < mid) out.push_back({p + half, std::min(q, mid) + half});
    if (q > mid) out.push_back({std::max(p, mid) - half, q - half});
  };

  for (const auto& i : a.intervals()) {
    const Rational left = ceil(i.lo / width) * width;
    const Rational right = floor(i.hi / width) * width;
    if (left > right) {
      flip_piece(i.lo, i.hi, right);
      continue;
    }
    if (i.lo < left) flip_piece(i.lo, left, left - width);
    if (left < right) out.push_back({left, right});
    if (right < i.hi) flip_piece(right, i.hi, right);
  }
  return merge_sorted(std::move(out));
}

std::vector<DyadicCylinder> dyadic_refine(const ClopenSet& a, unsigned g) {
  if (g > kMaxCylinderDepth) {
    throw CapExceeded("dyadic_refine: depth " + std::to_string(g) + " exceeds " +
                      std::to_string(kMaxCylinderDepth));
  }
  const Rational scale = Rational(pow2(g));
  auto grid_index = [&](const Rational& e) {
    const Rational scaled = e * scale;
    if (denominator(scaled) != 1) {
      const std::string reason = is_dyadic(e) ? "insufficient depth " + std::to_string(g) +
                                                    " for endpoint "
                                              : "non-dyadic endpoint ";
      throw ValidationError(reason + to_string(e));
    }
    return numerator(scaled).convert_to<std::uint64_t>();
  };
  std::vector<DyadicCylinder> out;
  for (const auto& i : a.intervals()) {
    const auto lo = grid_index(i.lo);
    const auto hi = grid_index(i.hi);
    for (auto k = lo; k < hi; ++k) out.push_back({g, k});
  }
  return out;
}

ClopenSet cylinder_set(const DyadicCylinder& c) {
  const Rational w = dyadic(c.depth);
  return ClopenSet::interval(Rational(c.index) * w, Rational(c.index + 1) * w);
}

ClopenSet digit_set(unsigned n) {
  if (n > kMaxShiftMaterialize) {
    throw CapExceeded("digit_set: digit " + std::to_string(n) + " exceeds materialization cap " +
                      std::to_string(kMaxShiftMaterialize));
  }
  const Rational w = dyadic(n + 1);
  const std::uint64_t blocks = std::uint64_t{1} << n;
  std::vector<Interval> out;
  out.reserve(blocks);
  for (std::uint64_t k = 0; k < blocks; ++k) {
    out.push_back({Rational(2 * k + 1) * w, Rational(2 * k + 2) * w});
  }
  return from_canonical(std::move(out));
}

std::optional<unsigned> dyadic_depth(const ClopenSet& a) {
  unsigned g = 0;
  for (const auto& i : a.intervals()) {
    for (const Rational* e : {&i.lo, &i.hi}) {
      if (!is_dyadic(*e)) return std::nullopt;
      g = std::max(g, boolmeas::dyadic_depth(*e));
    }
  }
  return g;
}

}  // namespace boolmeas

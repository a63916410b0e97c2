#pragma once

#include <vector>

#include "ergodic/field.hpp"

namespace ergodic {

/// Half-open interval [lo, hi) with endpoints in Q(sqrt(d)).
struct Interval {
  QuadNumber lo;
  QuadNumber hi;

  QuadNumber length() const { return hi - lo; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Finite disjoint union of half-open subintervals of [0,1), kept canonical:
/// parts sorted, pairwise disjoint, non-adjacent, no empty parts.  Canonical
/// form makes set equality structural, so exact assertions work.
///
/// Single points are identified with the empty set (half-open convention);
/// null sets never matter for any quantity computed here.
class IntervalSet {
 public:
  /// Empty set. The field tag is carried even when there are no parts.
  explicit IntervalSet(long d = QuadNumber::kDefaultFieldTag) : d_(d) {}

  /// Canonicalizes: validates endpoints in [0,1], drops empty intervals,
  /// sorts and merges overlapping/adjacent parts.
  static IntervalSet normalized(std::vector<Interval> raw,
                                long d = QuadNumber::kDefaultFieldTag);

  static IntervalSet unit(long d = QuadNumber::kDefaultFieldTag);
  static IntervalSet of(const QuadNumber& lo, const QuadNumber& hi);

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  size_t part_count() const { return parts_.size(); }
  long field_tag() const { return d_; }

  QuadNumber measure() const;
  bool contains(const QuadNumber& x) const;
  bool contains(const IntervalSet& other) const;

  bool operator==(const IntervalSet& o) const {
    return d_ == o.d_ && parts_ == o.parts_;
  }

  /// { x + t mod 1 : x in S }; splits at the wrap point when needed.
  IntervalSet translate_mod1(const QuadNumber& t) const;

  friend IntervalSet set_union(const IntervalSet& s, const IntervalSet& t);
  friend IntervalSet set_intersect(const IntervalSet& s, const IntervalSet& t);
  friend IntervalSet set_difference(const IntervalSet& s, const IntervalSet& t);
  friend IntervalSet set_complement(const IntervalSet& s);

 private:
  std::vector<Interval> parts_;
  long d_;
};

}  // namespace ergodic

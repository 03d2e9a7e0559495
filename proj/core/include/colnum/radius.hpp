#pragma once

#include <compare>
#include <string>

#include "colnum/errors.hpp"

namespace colnum {

// Radius parameter r, with infinity as a first-class value.  Infinity is a
// dedicated state, never a large stand-in integer.
class Radius {
 public:
  constexpr Radius() : value_(0), infinite_(false) {}
  constexpr Radius(int r) : value_(r), infinite_(false) {}  // NOLINT: implicit by design

  static constexpr Radius infinity() {
    Radius r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }

  constexpr int value() const { return value_; }

  // Effective hop budget on an n-vertex graph: a simple path has at most
  // n-1 edges, so infinity collapses to n.
  constexpr int bound(int n) const { return infinite_ ? n : value_; }

  constexpr bool operator==(const Radius& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }
  constexpr bool operator<(const Radius& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return value_ < o.value_;
  }
  constexpr bool operator<=(const Radius& o) const { return *this == o || *this < o; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  static Radius parse(const std::string& s) {
    if (s == "inf" || s == "infinity") return infinity();
    try {
      int v = std::stoi(s);
      if (v < 0) throw Error("radius must be non-negative, got " + s);
      return Radius(v);
    } catch (const std::logic_error&) {
      throw Error("cannot parse radius '" + s + "'");
    }
  }

 private:
  int value_;
  bool infinite_;
};

}  // namespace colnum

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace strongdim {

/// Extended distance: a non-negative integer or infinity.
///
/// The order is total with infinity as the single largest element, so
/// `infinite() <= infinite()` holds.  This is what makes cross-component
/// vertex pairs come out as mutually maximally distant without any
/// special casing in the resolving machinery.
class ExtDist {
 public:
  constexpr ExtDist() : v_(0) {}

  static constexpr ExtDist finite(std::int32_t k) { return ExtDist(k); }
  static constexpr ExtDist infinite() { return ExtDist(kInf); }

  constexpr bool is_finite() const { return v_ != kInf; }
  constexpr bool is_infinite() const { return v_ == kInf; }

  /// Finite value; meaningless for infinite distances.
  constexpr std::int32_t value() const { return v_; }

  friend constexpr auto operator<=>(ExtDist a, ExtDist b) = default;

  /// Exact on finite operands; absorbing on infinity.
  friend constexpr ExtDist operator+(ExtDist a, ExtDist b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return finite(a.v_ + b.v_);
  }

  friend constexpr ExtDist max(ExtDist a, ExtDist b) { return a < b ? b : a; }

  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(v_);
  }

  friend std::ostream& operator<<(std::ostream& os, ExtDist d) {
    return os << d.to_string();
  }

 private:
  static constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max();
  explicit constexpr ExtDist(std::int32_t v) : v_(v) {}
  std::int32_t v_;
};

}  // namespace strongdim

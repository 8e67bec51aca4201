#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace umlogic {

using Rational = boost::multiprecision::cpp_rational;

class GradeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact non-negative rational. Used both as the radius of a graded
/// modality (always in [0,1]) and as a distance between points, where the
/// disjoint-union sentinel 2 may also occur.
class Grade {
 public:
  Grade() = default;
  explicit Grade(Rational value);
  Grade(std::int64_t num, std::int64_t den = 1);

  /// Accepts "3", "0.125", ".5" or "1/8". Negative values and zero
  /// denominators are rejected; there is no upper bound here.
  static Grade parse(std::string_view text);

  static Grade zero() { return Grade{}; }
  static Grade one() { return Grade{1}; }
  static Grade sentinel() { return Grade{2}; }

  const Rational& value() const { return value_; }

  /// Lowest-terms fraction; integers print without a denominator.
  std::string str() const { return value_.str(); }

  bool in_unit_interval() const { return value_ >= 0 && value_ <= 1; }
  bool is_zero() const { return value_ == 0; }

  Grade operator*(const Grade& other) const { return Grade{value_ * other.value_}; }
  Grade operator/(const Grade& other) const;
  Grade reciprocal() const;

  friend bool operator==(const Grade& a, const Grade& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const;

 private:
  Rational value_{0};
};

inline const Grade& max(const Grade& a, const Grade& b) { return a < b ? b : a; }
inline const Grade& min(const Grade& a, const Grade& b) { return b < a ? b : a; }

struct GradeHash {
  std::size_t operator()(const Grade& g) const { return g.hash(); }
};

}  // namespace umlogic

#include "umlogic/grade.hpp"

#include <cctype>
#include <functional>

#include <boost/container_hash/hash.hpp>

namespace umlogic {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Rational digits_to_rational(std::string_view s) {
  Rational r{0};
  for (char c : s) r = r * 10 + (c - '0');
  return r;
}

}  // namespace

Grade::Grade(Rational value) : value_(std::move(value)) {
  if (value_ < 0) throw GradeError("grade must be non-negative: " + value_.str());
}

Grade::Grade(std::int64_t num, std::int64_t den) {
  if (den == 0) throw GradeError("zero denominator");
  value_ = Rational(num, den);
  if (value_ < 0) throw GradeError("grade must be non-negative: " + value_.str());
}

Grade Grade::parse(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw GradeError("empty grade literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw GradeError("malformed fraction '" + original + "'");
    Rational d = digits_to_rational(den);
    if (d == 0) throw GradeError("zero denominator in '" + original + "'");
    return Grade{digits_to_rational(num) / d};
  }

  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw GradeError("malformed decimal '" + original + "'");
  if (!whole.empty() && !all_digits(whole)) throw GradeError("malformed decimal '" + original + "'");
  if (dot != std::string_view::npos && !all_digits(frac)) throw GradeError("malformed decimal '" + original + "'");

  Rational value = digits_to_rational(whole);
  if (!frac.empty()) {
    Rational scale{1};
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value += digits_to_rational(frac) / scale;
  }
  return Grade{value};
}

Grade Grade::operator/(const Grade& other) const {
  if (other.value_ == 0) throw GradeError("division by zero grade");
  return Grade{value_ / other.value_};
}

Grade Grade::reciprocal() const { return Grade{1} / *this; }

std::size_t Grade::hash() const {
  std::size_t seed = boost::multiprecision::hash_value(numerator(value_));
  boost::hash_combine(seed, boost::multiprecision::hash_value(denominator(value_)));
  return seed;
}

}  // namespace umlogic

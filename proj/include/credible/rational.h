// Copyright 2026 The Credible Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CREDIBLE_RATIONAL_H_
#define CREDIBLE_RATIONAL_H_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace credible {

// Arbitrary-precision rational kept in lowest terms with a positive
// denominator. Every payoff and probability in the library is a Rat.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(runtime/explicit)
  Rat(int value) : value_(value) {}   // NOLINT(runtime/explicit)
  Rat(long numerator, long denominator);
  explicit Rat(const mpq_class& value) : value_(value) {
    value_.canonicalize();
  }

  // Accepts "a", "-a", "a/b". Throws InputError on malformed text or a zero
  // denominator.
  static Rat Parse(std::string_view text);

  std::string ToString() const { return value_.get_str(); }
  mpz_class Numerator() const { return value_.get_num(); }
  mpz_class Denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool IsZero() const { return sgn(value_) == 0; }
  int Sign() const { return sgn(value_); }

  Rat& operator+=(const Rat& o) {
    value_ += o.value_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    value_ -= o.value_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    value_ *= o.value_;
    return *this;
  }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  std::size_t Hash() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

using RatVector = std::vector<Rat>;

// Renders a vector as "(a, b, c)".
std::string ToString(const RatVector& v);

struct RatHash {
  std::size_t operator()(const Rat& r) const { return r.Hash(); }
};

}  // namespace credible

#endif  // CREDIBLE_RATIONAL_H_

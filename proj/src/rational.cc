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

#include "credible/rational.h"

#include <functional>
#include <sstream>

#include "credible/errors.h"

namespace credible {

Rat::Rat(long numerator, long denominator) {
  if (denominator == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rat Rat::Parse(std::string_view text) {
  std::string s(text);
  // Trim surrounding blanks.
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw InputError("empty rational");
  s = s.substr(first, last - first + 1);

  auto valid_int = [](std::string_view part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };

  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num = num.substr(1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw InputError("rational with zero denominator '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.IsZero()) throw std::domain_error("division by zero rational");
  value_ /= o.value_;
  return *this;
}

std::size_t Rat::Hash() const {
  std::size_t h = std::hash<std::string>()(value_.get_num().get_str(16));
  return h ^ (std::hash<std::string>()(value_.get_den().get_str(16)) +
              0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.ToString();
}

std::string ToString(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace credible

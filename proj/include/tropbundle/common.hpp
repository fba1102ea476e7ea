// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROPBUNDLE_COMMON_HPP_
#define TROPBUNDLE_COMMON_HPP_

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropbundle {

using Rational = mpq_class;

// Subsets of a ground set of at most 32 elements, as bitmasks over the
// ground-set index order.
using Set = std::uint32_t;
inline constexpr int kMaxGround = 24;

inline int Card(Set s) { return std::popcount(s); }
inline bool Contains(Set s, int i) { return (s >> i) & 1u; }
inline Set Bit(int i) { return Set{1} << i; }
inline Set FullSet(int m) { return m >= 32 ? ~Set{0} : (Bit(m) - 1); }
inline bool IsSubset(Set a, Set b) { return (a & ~b) == 0; }

std::vector<int> Members(Set s);
Set FromMembers(const std::vector<int>& members);

// Lexicographic comparison of the sorted member index tuples.
bool LexLess(Set a, Set b);

// Packs the members of `s` lying in `keep` into consecutive low bits.
Set Compress(Set s, Set keep);
// Inverse of Compress.
Set Expand(Set s, Set keep);

// Error kinds shared by the library, the C API and the CLI.
enum class ErrorKind {
  kInvalidInput,
  kParse,
  kNotFound,
  kDomain,
  kLimit,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), kind_(kind), name_(name) {}
  ErrorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  ErrorKind kind_;
  std::string name_;
};

[[noreturn]] void Fail(const std::string& name, const std::string& detail,
                       ErrorKind kind = ErrorKind::kDomain);

// Canonical "p/q" text of a rational, integers without denominator.
std::string RationalToString(const Rational& q);
Rational RationalFromString(const std::string& text);

// Checked 64-bit integer helpers.
std::int64_t CheckedAdd(std::int64_t a, std::int64_t b);
std::int64_t CheckedMul(std::int64_t a, std::int64_t b);

}  // namespace tropbundle

#endif  // TROPBUNDLE_COMMON_HPP_

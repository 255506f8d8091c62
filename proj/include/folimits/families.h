// Copyright 2026 The folimits Authors
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


#ifndef FOLIMITS_FAMILIES_H_
#define FOLIMITS_FAMILIES_H_

#include <string>
#include <vector>

#include "folimits/canonical.h"
#include "folimits/enumerate.h"
#include "folimits/exact.h"

namespace folimits {

// Named unicycle families with closed-form weighted sums.
//
// Graphs:
//   kCycleWithPath  C_{i,k-i}: an i-cycle with a path of k-i edges at one
//                   vertex, 3 <= i <= k-1. Sum of 1/aut is (k-3)/2.
//   kTriangleTwoPaths  T_{0,i,k-3-i}: a triangle with paths of i and k-3-i
//                   edges at two of its vertices. Sum is (k-4)/2.
// Hypergraphs (r = (d-2)/(d-1)):
//   kTriangle       T_{a,b}: a 3-cycle with paths at free vertices of two
//                   different edges. Sum is (k-4)/2 r^2.
//   kTwoCycle       B_{a,b}: the same on a 2-cycle. Sum is (k-3)/4 r^2.
//   kCycle          O_{a,b}: an a-cycle, a >= 2, with one path at a free
//                   vertex. Sum is (k-2)/2 r.
// A path of length b is a chain of b edges, each glued to the previous one
// at a single vertex.
enum class Family {
  kCycleWithPath,
  kTriangleTwoPaths,
  kTriangle,
  kTwoCycle,
  kCycle,
};

const char* FamilyName(Family family);

// Families defined for uniformity d.
std::vector<Family> FamiliesFor(int d);

// Smallest k for which the closed form applies.
int FamilyMinSize(Family family);

// Labeled members of `family` with k edges; one hypergraph per member.
std::vector<std::vector<LabeledEdge>> FamilyMembers(Family family, int d,
                                                    int k);

struct FamilyCheck {
  Family family;
  int uniformity = 2;
  int k = 0;
  Rational sum;       // over members, aut taken from the enumeration
  Rational expected;  // closed form
  std::vector<std::string> member_codes;
  bool holds = false;  // sum == expected and every member was enumerated
};

// Throws DomainError if k is below the family threshold or the family does
// not apply to d, BudgetError if k exceeds the budget.
FamilyCheck CheckFamilySum(Family family, int d, int k,
                           const EnumerationBudget& budget);

// Every family of uniformity d at size k.
std::vector<FamilyCheck> VerifyFamilySums(int d, int k,
                                          const EnumerationBudget& budget);

// Sum over connected unicyclic graphs with k edges of 1/aut against the
// lower bound (2k-7)/2, for k >= 4.
struct InverseAutBoundCheck {
  int k = 0;
  Rational sum;
  Rational bound;
  bool holds = false;
};

InverseAutBoundCheck CheckInverseAutLowerBound(
    int k, const EnumerationBudget& budget = {});

struct AutBoundReport {
  int uniformity = 3;
  int max_size = 0;
  std::size_t shapes_checked = 0;
  Rational max_ratio;         // max (d-2)!^|H| / aut(H)
  std::string argmax_code;
  Rational bound;             // ((d-2)/(d-1))^2
  bool ratio_bound_holds = false;
  bool free_vertex_bound_holds = false;  // aut(H) >= prod free(h)!
  bool excess_holds = false;             // every shape has excess 0
};

// Scans every connected unicycle of uniformity d >= 3 with at most
// max_size edges.
AutBoundReport VerifyAutBound(int d, int max_size,
                              const EnumerationBudget& budget);

}  // namespace folimits

#endif  // FOLIMITS_FAMILIES_H_

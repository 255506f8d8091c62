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


#include "folimits/families.h"

#include <algorithm>
#include <tuple>
#include <utility>

#include "folimits/errors.h"

namespace folimits {
namespace {

class Builder {
 public:
  explicit Builder(int d) : d_(d) {}

  // Returns, per cycle edge, the vertices usable as attachment points: the
  // free vertices for hypergraphs, the edge's first vertex for graphs.
  std::vector<int> Cycle(int length) {
    std::vector<int> shared(length);
    for (int& v : shared) v = next_++;
    std::vector<int> anchors;
    for (int i = 0; i < length; ++i) {
      LabeledEdge edge = {shared[i], shared[(i + 1) % length]};
      int anchor = shared[i];
      for (int j = 0; j < d_ - 2; ++j) {
        edge.push_back(next_++);
        if (j == 0) anchor = edge.back();
      }
      edges_.push_back(std::move(edge));
      anchors.push_back(anchor);
    }
    return anchors;
  }

  void Path(int v, int length) {
    for (int i = 0; i < length; ++i) {
      LabeledEdge edge = {v};
      for (int j = 0; j < d_ - 1; ++j) edge.push_back(next_++);
      v = edge[1];
      edges_.push_back(std::move(edge));
    }
  }

  std::vector<LabeledEdge> Take() { return std::move(edges_); }

 private:
  int d_;
  int next_ = 0;
  std::vector<LabeledEdge> edges_;
};

bool IsGraphFamily(Family family) {
  return family == Family::kCycleWithPath ||
         family == Family::kTriangleTwoPaths;
}

void RequireApplies(Family family, int d, int k) {
  if (d < 2) throw DomainError("uniformity must be at least 2");
  if (IsGraphFamily(family) != (d == 2)) {
    throw DomainError(std::string("family ") + FamilyName(family) +
                      " is not defined for d=" + std::to_string(d));
  }
  if (k < FamilyMinSize(family)) {
    throw DomainError(std::string("family ") + FamilyName(family) +
                      " needs k >= " + std::to_string(FamilyMinSize(family)));
  }
}

Rational ClosedForm(Family family, int d, int k) {
  const Rational r(d - 2, d - 1);
  switch (family) {
    case Family::kCycleWithPath:
      return Rational(k - 3, 2);
    case Family::kTriangleTwoPaths:
      return Rational(k - 4, 2);
    case Family::kTriangle:
      return Rational(k - 4, 2) * r * r;
    case Family::kTwoCycle:
      return Rational(k - 3, 4) * r * r;
    case Family::kCycle:
      return Rational(k - 2, 2) * r;
  }
  return 0;
}

const UnicycleShape* Lookup(const std::vector<UnicycleShape>& table,
                            const UnicycleShape& shape) {
  auto it = std::lower_bound(
      table.begin(), table.end(), shape, [](const auto& a, const auto& b) {
        return std::tie(a.size, a.code) < std::tie(b.size, b.code);
      });
  if (it == table.end() || it->size != shape.size || it->code != shape.code) {
    return nullptr;
  }
  return &*it;
}

}  // namespace

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kCycleWithPath: return "C";
    case Family::kTriangleTwoPaths: return "T0";
    case Family::kTriangle: return "T";
    case Family::kTwoCycle: return "B";
    case Family::kCycle: return "O";
  }
  return "?";
}

std::vector<Family> FamiliesFor(int d) {
  if (d == 2) return {Family::kCycleWithPath, Family::kTriangleTwoPaths};
  return {Family::kTriangle, Family::kTwoCycle, Family::kCycle};
}

int FamilyMinSize(Family family) {
  switch (family) {
    case Family::kCycleWithPath: return 3;
    case Family::kTriangleTwoPaths: return 4;
    case Family::kTriangle: return 4;
    case Family::kTwoCycle: return 3;
    case Family::kCycle: return 2;
  }
  return 0;
}

std::vector<std::vector<LabeledEdge>> FamilyMembers(Family family, int d,
                                                    int k) {
  RequireApplies(family, d, k);
  std::vector<std::vector<LabeledEdge>> members;
  switch (family) {
    case Family::kCycleWithPath:
      for (int i = 3; i <= k - 1; ++i) {
        Builder b(d);
        b.Path(b.Cycle(i)[0], k - i);
        members.push_back(b.Take());
      }
      break;
    case Family::kTriangleTwoPaths:
      for (int i = 1; i <= (k - 3) / 2; ++i) {
        Builder b(d);
        const auto anchors = b.Cycle(3);
        b.Path(anchors[1], i);
        b.Path(anchors[2], k - 3 - i);
        members.push_back(b.Take());
      }
      break;
    case Family::kTriangle:
    case Family::kTwoCycle: {
      const int length = family == Family::kTriangle ? 3 : 2;
      for (int a = 1; a <= (k - length) / 2; ++a) {
        Builder b(d);
        const auto anchors = b.Cycle(length);
        b.Path(anchors[0], a);
        b.Path(anchors[1], k - length - a);
        members.push_back(b.Take());
      }
      break;
    }
    case Family::kCycle:
      for (int a = 2; a <= k - 1; ++a) {
        Builder b(d);
        b.Path(b.Cycle(a)[0], k - a);
        members.push_back(b.Take());
      }
      break;
  }
  return members;
}

FamilyCheck CheckFamilySum(Family family, int d, int k,
                           const EnumerationBudget& budget) {
  RequireApplies(family, d, k);
  budget.Check(k, "family");
  const auto table = ConnectedUnicycles(d, k, budget);
  FamilyCheck check;
  check.family = family;
  check.uniformity = d;
  check.k = k;
  check.expected = ClosedForm(family, d, k);
  bool found_all = true;
  for (const auto& edges : FamilyMembers(family, d, k)) {
    const UnicycleShape shape = CanonicalUnicycle(d, edges);
    const UnicycleShape* entry = Lookup(*table, shape);
    if (entry == nullptr || entry->aut != shape.aut) {
      found_all = false;
      continue;
    }
    check.sum += entry->WeightedInverseAut();
    check.member_codes.push_back(entry->code);
  }
  check.holds = found_all && check.sum == check.expected;
  return check;
}

std::vector<FamilyCheck> VerifyFamilySums(int d, int k,
                                          const EnumerationBudget& budget) {
  std::vector<FamilyCheck> checks;
  for (Family family : FamiliesFor(d)) {
    checks.push_back(CheckFamilySum(family, d, k, budget));
  }
  return checks;
}

InverseAutBoundCheck CheckInverseAutLowerBound(
    int k, const EnumerationBudget& budget) {
  if (k < 4) throw DomainError("the 1/aut lower bound needs k >= 4");
  InverseAutBoundCheck check;
  check.k = k;
  check.sum = InverseAutSum(k, budget);
  check.bound = Rational(2 * k - 7, 2);
  check.holds = check.sum >= check.bound;
  return check;
}

AutBoundReport VerifyAutBound(int d, int max_size,
                              const EnumerationBudget& budget) {
  if (d < 3) throw DomainError("the automorphism bound needs d >= 3");
  const auto table = ConnectedUnicycles(d, max_size, budget);
  AutBoundReport report;
  report.uniformity = d;
  report.max_size = max_size;
  report.bound = Rational(d - 2, d - 1) * Rational(d - 2, d - 1);
  report.free_vertex_bound_holds = true;
  report.excess_holds = true;
  for (const auto& shape : *table) {
    ++report.shapes_checked;
    const Rational ratio = shape.WeightedInverseAut();
    if (report.argmax_code.empty() || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax_code = shape.code;
    }
    const auto edges = RealizeUnicycle(d, shape.code);
    int vertices = 0;
    for (const auto& edge : edges) {
      for (int v : edge) vertices = std::max(vertices, v + 1);
    }
    if ((d - 1) * static_cast<int>(edges.size()) - vertices != 0) {
      report.excess_holds = false;
    }
    BigInt free_product = 1;
    for (int count : FreeVertexCounts(edges)) free_product *= Factorial(count);
    if (shape.aut < free_product) report.free_vertex_bound_holds = false;
  }
  report.ratio_bound_holds =
      report.shapes_checked > 0 && report.max_ratio <= report.bound;
  return report;
}

}  // namespace folimits

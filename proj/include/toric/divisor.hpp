#pragma once

#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

// Element of the kernel lattice R(Sigma): an integer tuple (a_1..a_n) with
// sum a_i v_i = 0, identified with a curve class.
using CurveClass = std::vector<long long>;

CurveClass curve_add(const CurveClass& a, const CurveClass& b);
CurveClass curve_scale(const CurveClass& a, long long k);
bool in_kernel(const MomentPolytope& p, const CurveClass& c);

// v_{i-1} + v_{i+1} = d_i v_i; the facet self-intersection is -d_i.
long long self_intersection_d(const MomentPolytope& p, int i);

// Class of the facet divisor: 1 at i-1 and i+1, -d_i at i.
CurveClass facet_class(const MomentPolytope& p, int i);

long long chern_number(const CurveClass& c);
Rat symplectic_area(const MomentPolytope& p, const CurveClass& c);

enum class NefClass { Fano, NefNotFano, NonNef };

struct FacetReport {
  int index = 0;
  long long d = 0;
  long long self_intersection = 0;
  long long chern = 0;
  Rat area;
  CurveClass cls;
};

struct Classification {
  NefClass kind = NefClass::Fano;
  std::vector<FacetReport> facets;
};

Classification classify(const MomentPolytope& p);
std::string nef_class_name(NefClass c);

// Lattice basis of the kernel (rank n-2), deterministic.
std::vector<CurveClass> h2_basis(const MomentPolytope& p);

}  // namespace toric

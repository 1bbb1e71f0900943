#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "toric/divisor.hpp"
#include "toric/novikov.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct UncoveredPattern : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotNef : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SeidelCode { C1, C2a, C2b, C2c, C2d, C3a, C3b, C3c, C3d, C3e };

std::string seidel_code_name(SeidelCode c);

// The matched local chern-vanishing pattern around the acting facet.
// `mirrored` records the side the pattern extends to: for the 2-family the
// base orientation runs along increasing facet index, for the 3-family along
// decreasing index; the reflected match sets mirrored.
struct SeidelCase {
  SeidelCode code;
  bool mirrored = false;
  int dir = 1;  // +1 when offsets in the closed form run with the listing
};

SeidelCase dispatch_case(const MomentPolytope& p, int m);

// One summand of the closed form:
//   coeff * class (x) q t^{phi_max + shift} * prod_w 1/(1 - t^{-w}).
struct ClosedTerm {
  Rat coeff;
  CurveClass cls;
  Rat shift;
  std::vector<Rat> factors;
};

struct SeidelElement {
  SeidelCase kase;
  int facet = 0;
  Rat phi_max;
  std::vector<ClosedTerm> closed_form;
};

SeidelElement seidel_element(const MomentPolytope& p, int m,
                             bool normalized = false);

QuantumClass expand_closed_form(const SeidelElement& e, const Rat& window);

// Tabulated contribution list for codes 1, 2a, 2b, 3a, 3b, 3c: all pairs
// (B, a_B) with symplectic area of B at most the window.
std::vector<std::pair<CurveClass, CurveClass>> contributions(
    const MomentPolytope& p, int m, const Rat& window);

// Deterministic closed-form rendering.
std::string render_closed_form(const SeidelElement& e,
                               const std::function<std::string(
                                   const CurveClass&)>& name);

}  // namespace toric

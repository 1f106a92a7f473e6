#pragma once

// The exact four-domain partition of q^2 between the two 5D hyperboloids
// q^2 + q5^2 = M^2 (hyperboloid 1) and q^2 - q5^2 = -M^2 (hyperboloid 2):
//   I   = [0, M^2]        hyperboloid 1
//   II  = (M^2, inf)      hyperboloid 2
//   III = (-inf, -M^2)    hyperboloid 1
//   IV  = [-M^2, 0)       hyperboloid 2
// Boundary points 0, M^2 belong to I and -M^2 to IV.  Comparisons are exact;
// callers needing fuzzy boundaries must snap their q^2 first.

#include <utility>

#include "conecalc/errors.hpp"

namespace conecalc {

enum class Domain { I = 0, II = 1, III = 2, IV = 3 };

struct DomainLabel {
  Domain label = Domain::I;
  int hyperboloid = 1;  // 1: q^2+q5^2=M^2, 2: q^2-q5^2=-M^2
};

const char* domain_name(Domain d);

// Total function; exactly one label for every real q^2.
DomainLabel classify(double q2, double M);

// M^2 - q^2 on hyperboloid 1, M^2 + q^2 on hyperboloid 2.  Throws
// DomainMismatch when the label does not match classify(q2, M).
double q5_squared(const DomainLabel& label, double q2, double M);

// Indicator of hyperboloid a's domain union: Lambda_1 on I u III,
// Lambda_2 on II u IV.  Lambda_1 + Lambda_2 = 1 for every q^2.
int lambda_indicator(int a, double q2, double M);

// q^2 -> M^4 / q^2; swaps I <-> II and III <-> IV on interiors, with
// q^2 = +-M^2 fixed.  Throws NullSquare at q^2 = 0.
std::pair<double, DomainLabel> invert_domain(double q2, double M);

// q^2 -> -q^2; swaps I <-> IV and II <-> III on interiors.
std::pair<double, DomainLabel> reflect_domain(double q2, double M);

}  // namespace conecalc

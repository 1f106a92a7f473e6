#include "conecalc/domain_partition.hpp"

namespace conecalc {

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::I: return "I";
    case Domain::II: return "II";
    case Domain::III: return "III";
    default: return "IV";
  }
}

DomainLabel classify(double q2, double M) {
  if (M <= 0.0) throw NonPositiveScale("classify requires M > 0");
  const double M2 = M * M;
  if (q2 >= 0.0 && q2 <= M2) return {Domain::I, 1};
  if (q2 > M2) return {Domain::II, 2};
  if (q2 < -M2) return {Domain::III, 1};
  return {Domain::IV, 2};  // [-M^2, 0)
}

double q5_squared(const DomainLabel& label, double q2, double M) {
  const DomainLabel actual = classify(q2, M);
  if (actual.label != label.label || actual.hyperboloid != label.hyperboloid)
    throw DomainMismatch("label does not match classify(q2, M)");
  const double M2 = M * M;
  return label.hyperboloid == 1 ? M2 - q2 : M2 + q2;
}

int lambda_indicator(int a, double q2, double M) {
  if (a != 1 && a != 2) throw Error("lambda_indicator: a must be 1 or 2");
  const int hyp = classify(q2, M).hyperboloid;
  return hyp == a ? 1 : 0;
}

std::pair<double, DomainLabel> invert_domain(double q2, double M) {
  if (M <= 0.0) throw NonPositiveScale("invert_domain requires M > 0");
  if (q2 == 0.0) throw NullSquare("inversion of q^2 = 0");
  const double M2 = M * M;
  const double out = M2 * M2 / q2;
  return {out, classify(out, M)};
}

std::pair<double, DomainLabel> reflect_domain(double q2, double M) {
  const double out = (q2 == 0.0) ? 0.0 : -q2;  // 0 is its own reflection
  return {out, classify(out, M)};
}

}  // namespace conecalc

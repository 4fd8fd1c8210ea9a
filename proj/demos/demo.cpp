#include <cstdio>
#include <string>

#include "mathieu/mathieu.hpp"

using namespace mathieu;

int main() {
  const ParamSet p(1.0, 1.0);
  const auto f = CoefficientSeq::mathieu_f(p);

  const auto v = eval_series(f, {0.5, 0.25});
  std::printf("F(0.5+0.25i; mu=1, r=1) = %.15g%+.15gi  (N = %zu, tail <= %.1e)\n", v.value.real(),
              v.value.imag(), v.truncation_index, v.tail_bound);

  const auto s = eval_S(2.0);
  std::printf("S(2) = %.15g, Alzer bounds (%.15g, %.15g)\n", s.value, alzer_lower_bound(2.0),
              alzer_upper_bound(2.0));

  for (auto kind : kAllThresholdKinds) {
    const double mu = 2.0;
    const double r0 = threshold(kind, mu);
    const auto seq = sequence_criterion(kind, ParamSet(mu, 0.99 * r0));
    std::printf("%-18s mu=2  r0=%.12f  sequence criterion: %s\n", std::string(to_string(kind)).c_str(), r0,
                std::string(to_string(seq.status)).c_str());
  }

  const auto disk = verify_starlike(CoefficientSeq::shat());
  std::printf("SHat starlike on |z| <= %.3f: min Re(zf'/f) = %.6f at %.4f%+.4fi\n", disk.grid.max_radius,
              disk.min_value, disk.argmin.real(), disk.argmin.imag());

  const auto g = check_goodman(CoefficientSeq::double_factorial());
  std::printf("Double factorial Goodman margin: %.6f (%s)\n", g.min_margin,
              std::string(to_string(g.status)).c_str());
}

#pragma once

#include "henig/dilation.hpp"

namespace henig {

inline constexpr double kFailTol = 1e-7;

enum class Verdict { holds_certified, fails_certified, inconclusive };
std::string to_string(Verdict v);

struct SspReport {
  double gap_sampled = 0.0;
  double covering_radius = 0.0;
  double gap_lower_bound = 0.0;
  Verdict verdict = Verdict::inconclusive;
  Point p, q;  // nearest pair: p in co(C cap S), q in co((bd K cap S) u {0})
  std::optional<Functional> separating_functional;  // dual-norm 1, f(p) - f(q) = gap
  bool exact = false;
};

SspReport ssp_gap(const Space& s, const OrderCone& C, const OrderCone& K, double mesh, std::uint64_t seed);

struct BpHullReport {
  double min_f_first = 0.0;   // over co(C(f,alpha) cap S)
  double max_f_second = 0.0;  // over co((bd C(f,alpha) cap S) u {0})
  size_t checked_first = 0, checked_second = 0;
  size_t violations = 0;
};

BpHullReport bp_hull_bounds_check(const Space& s, const Functional& f, double alpha, double mesh,
                                  std::uint64_t seed);

// Margins of the three witness conditions; each must be positive.
struct WitnessChecks {
  double aug = 0.0;         // (f, alpha) in C^{a#}_+
  double neg_cone = 0.0;    // f(x) + alpha||x|| < 0 on -C \ {0}
  double outside = 0.0;     // f(x) + alpha||x|| > 0 off int(-K)
  bool valid() const { return aug > 0 && neg_cone > 0 && outside > 0; }
};

struct Witness {
  Functional f;
  double alpha = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  WitnessChecks checks;
};

struct WitnessOptions {
  int alpha_grid_size = 1000;
  double mesh = 0.05;
  std::uint64_t seed = 42;
};

// Extremes the witness margins depend on (all three are affine in alpha).
struct WitnessBounds {
  double inf_on_cone = 0.0;      // certified lower bound of inf f over C cap S
  double sup_off_interior = 0.0; // certified upper bound of sup -f over S \ int(-K)
};

WitnessBounds witness_bounds(const Space& s, const Cone& C, const OrderCone& K, const Functional& f, double mesh,
                             std::uint64_t seed);
WitnessChecks witness_margins(const WitnessBounds& b, double alpha);

std::optional<Witness> find_witness(const Space& s, const Cone& C, const OrderCone& K, const SspReport& report,
                                    const WitnessOptions& opt = {});
WitnessChecks verify_witness(const Space& s, const Cone& C, const OrderCone& K, const Witness& w, double mesh,
                             std::uint64_t seed);

struct MonotoneReport {
  SspReport first, second;
  bool consistent = true;  // first holds => second holds
};

MonotoneReport ssp_monotone_check(const Space& s, const OrderCone& C, const OrderCone& K1, const OrderCone& K2,
                                  double mesh, std::uint64_t seed);

}  // namespace henig

#pragma once

#include "henig/sector.hpp"
#include "henig/space.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <variant>

namespace henig {

inline constexpr double kMembershipTol = 1e-9;

struct Polyhedral {
  Points generators;
};
// {x : f(x) - alpha ||x|| >= 0}, stored with dual_norm(f) = 1 and 0 < alpha < 1.
struct BishopPhelps {
  Functional f;
  double alpha;
};
// S(f, alpha) = {x : f(x) + alpha ||x|| <= 0}.
struct Sublevel {
  Functional f;
  double alpha;
};
class Cone;
struct Negated {
  std::shared_ptr<const Cone> inner;
};

class Cone {
 public:
  using Rep = std::variant<Polyhedral, BishopPhelps, Sublevel, Negated>;

  static Cone polyhedral(Points generators);
  static Cone bishop_phelps(const Space& s, const Functional& f, double alpha);
  static Cone sublevel(const Space& s, const Functional& f, double alpha);
  static Cone negated(const Cone& inner);

  const Rep& rep() const { return rep_; }
  bool convexity_hint() const { return true; }
  int dim() const { return dim_; }

  template <class T>
  const T* as() const { return std::get_if<T>(&rep_); }

 private:
  Cone(Rep r, int d) : rep_(std::move(r)), dim_(d) {}
  Rep rep_;
  int dim_;
};

bool membership(const Space& s, const Cone& c, const Point& x, double tol = kMembershipTol);
// Strict inequality set of a sublevel cone.
bool interior_membership(const Space& s, const Cone& c, const Point& x);

// Exact planar sector of the cone (2-D only); nullopt for a line or dim != 2.
std::optional<Sector> cone_sector(const Space& s, const Cone& c);
// A direction in the interior (relative interior for polyhedral cones).
Point interior_direction(const Space& s, const Cone& c);

// Mesh samples of K cap S_X and bd(K) cap S_X with their covering radii.
struct ConeSample {
  Points surface;
  Points boundary;
  double surface_radius = 0.0;
  double boundary_radius = 0.0;
};

using ConePredicate = std::function<bool(const Point&)>;

// Sphere sample filtered by `inside`, plus boundary points found by bisection
// between `interior` and each outside sample direction.
ConeSample sample_by_predicate(const Space& s, const ConePredicate& inside, const Point& interior, double mesh,
                               std::uint64_t seed);
ConeSample cone_sample(const Space& s, const Cone& c, double mesh, std::uint64_t seed);

struct BasePolytope {
  Points vertices;
  double delta_B = 0.0;
  double M = 0.0;
  Functional f;  // the functional whose level set {f = 1} carries the base
};

BasePolytope polyhedral_base(const Space& s, const Cone& c, const Functional& f);
std::optional<BasePolytope> bounded_base(const Space& s, const Cone& c);

struct SublevelBase {
  Functional g;  // = -f; the base is {x in S(f,alpha) : g(x) = 1}
  double bound = 0.0;  // 1/alpha
  Points sample;
};

SublevelBase sublevel_base(const Space& s, const Functional& f, double alpha, double mesh = 0.05,
                           std::uint64_t seed = 42);

enum class AugClass { a_star, a_sharp, a_star_plus, a_sharp_plus, none };
std::string to_string(AugClass c);

struct AugPair {
  Functional f;
  double alpha = 0.0;
  AugClass cls = AugClass::none;
  double margin = 0.0;          // certified lower bound of inf_{C cap S} f - alpha
  double margin_sampled = 0.0;  // the sampled (or exact) value
  bool exact = false;
};

struct ClassifyOptions {
  double mesh = 1e-3;
  std::uint64_t seed = 42;
  bool force_sampled = false;  // skip the closed forms
};

// Certified inf of f over C cap S_X (lower bound, sampled value).
std::pair<double, double> inf_on_cone_sphere(const Space& s, const Cone& c, const Functional& f,
                                             const ClassifyOptions& opt, bool* exact = nullptr);

AugPair classify_aug_pair(const Space& s, const Cone& c, const Functional& f, double alpha,
                          const ClassifyOptions& opt = {});
std::optional<AugPair> augmented_witness_search(const Space& s, const Cone& c);

}  // namespace henig

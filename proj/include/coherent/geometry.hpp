#pragma once

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "coherent/rational.hpp"
#include "coherent/semigroup.hpp"
#include "coherent/twist.hpp"

namespace coherent {

// Phase-space point: q is the position coordinate, p the momentum.
struct Vec2 {
    double q = 0, p = 0;
};

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Vec3 normalized(const Vec3& a);

// Unit-speed polyline in the plane with an explicit Moore length equal to
// its arc length.  A single vertex is the length-zero path at that point.
class PlanePolyline {
public:
    explicit PlanePolyline(std::vector<Vec2> vertices);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    double length() const { return length_; }
    const Vec2& start() const { return vertices_.front(); }
    const Vec2& end() const { return vertices_.back(); }
    // Arc-length parameterization, constant past the end.
    Vec2 point_at(double t) const;

private:
    std::vector<Vec2> vertices_;
    double length_;
    std::vector<double> cumulative_;
};

// Piecewise minor-great-circle path on a sphere of radius R.  Waypoints are
// unit vectors (tolerance 1e-12); consecutive waypoints must not be
// antipodal, since the connecting geodesic would be ambiguous.
class SphereGeodesicPath {
public:
    SphereGeodesicPath(std::vector<Vec3> waypoints, double radius = 1.0);

    const std::vector<Vec3>& waypoints() const { return waypoints_; }
    double radius() const { return radius_; }
    double length() const { return length_; }
    const Vec3& start() const { return waypoints_.front(); }
    const Vec3& end() const { return waypoints_.back(); }
    Vec3 point_at(double t) const;

private:
    std::vector<Vec3> waypoints_;
    double radius_;
    double length_;
    std::vector<double> cumulative_;  // arc length up to each waypoint
};

// Strictly associative concatenation: defined exactly when end(a) matches
// start(b) within 1e-12, in which case the vertex lists are joined (the
// duplicate junction vertex dropped) and the length recomputed from the
// joined list -- which is what keeps (ab)c and a(bc) equal vertex-for-
// vertex.  A mismatch yields the absorbing zero, reported as nullopt.
std::optional<PlanePolyline> moore_concat(const PlanePolyline& a,
                                          const PlanePolyline& b);
std::optional<SphereGeodesicPath> moore_concat(const SphereGeodesicPath& a,
                                               const SphereGeodesicPath& b);

// Metric on Moore paths: max pointwise distance under the shared
// arc-length parameterization (paths sit at their endpoint past their
// length), plus sqrt(|l2 - l1|) for the L2 speed mismatch of unit-speed
// paths, plus |l2 - l1|.  The max term is evaluated at both paths' vertex
// parameters and at kDistanceSamples uniform samples; in the plane the
// pointwise distance is convex between vertex parameters, so the vertex
// evaluations already make the term exact there.
inline constexpr int kDistanceSamples = 2048;
double moore_distance(const PlanePolyline& a, const PlanePolyline& b);
double moore_distance(const SphereGeodesicPath& a, const SphereGeodesicPath& b);

// Signed area of the phase-plane triangle (start a, end a, end b) with the
// orientation that makes the impulse scenario positive: a momentum leg
// from (0,0) to (0,p) followed by a position leg to (vt,p) has area
// +p*v*t/2.  Composability of the two paths is checked to 1e-12.
double plane_tailleur(const PlanePolyline& a, const PlanePolyline& b);

// 2*|turning number| of a simple closed polyline (first vertex repeated at
// the end, tolerance 1e-12).  Errors: NotClosed, SelfIntersecting.
int maslov_polygon(const PlanePolyline& closed);

struct PhaseSample {
    double t = 0;
    double area = 0;  // representative of the accumulated area modulo h
    std::complex<double> phase{1.0, 0.0};
};

// Free particle of momentum p and velocity v: the swept phase-plane area
// pvt doubles through the turning-point correction (Maslov index 2) and
// enters the phase as exp(2 pi i pvt / h); the phase is periodic in t with
// period h / (p v).  Errors: NonpositiveParameter.
PhaseSample free_particle_phase(double p, double v, double t, double h);

// h / p as an exact rational.  Errors: ZeroMomentum on p = 0,
// NonpositiveParameter on h <= 0 or p < 0.
Rat de_broglie_wavelength(const Rat& h, const Rat& p);

// Minor arc between non-antipodal unit vectors (AntipodalUndefined when
// dot(a, b) <= -1 + 1e-12); the angle is computed as atan2(|a x b|, a.b).
struct GeodesicArc {
    Vec3 a, b;
    double angle;
};
GeodesicArc sphere_geodesic(const Vec3& a, const Vec3& b);

// Signed spherical triangle area on radius R: magnitude from the
// half-angle solid-angle formula
//   tan(omega/2) = a.(b x c) / (1 + a.b + b.c + c.a),
// which is stable for small triangles; the sign is the sign of the scalar
// triple product.  Ranges over (-2 pi R^2, 2 pi R^2).
double sphere_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c,
                            double radius = 1.0);

// Area of the triangle (start a, end a, end b) reduced into [0, 4 pi R^2):
// the taille of the sphere is its total area, so areas are only defined
// modulo 4 pi R^2.  Paths must compose (end a = start b within 1e-12) and
// the three corners must be pairwise non-antipodal.
double sphere_tailleur(const SphereGeodesicPath& a, const SphereGeodesicPath& b);

enum class Space { Plane, Sphere };

// Ambient space plus its taille (total symplectic area): 0 for the plane,
// 4 pi R^2 for the sphere.
struct TailleContext {
    Space space = Space::Plane;
    double radius = 1.0;
    double taille() const;
};

// Max coboundary residual of the endpoint-area cocycle over `samples`
// random composable path triples: each sample draws four points A,B,C,D
// (paths A->B, B->C, C->D) and evaluates
//   area(B,C,D) - area(A,C,D) + area(A,B,D) - area(A,B,C),
// reduced mod the taille on the sphere (distance to 0 on the circle), and
// reports the largest magnitude.  Sampling is deterministic in the seed;
// per-sample substreams derive as seed + index, so callers may shard.
double tailleur_cocycle_residual(const TailleContext& ctx, int samples,
                                 unsigned long long seed);

struct EquatorSample {
    double lambda = 0;
    double area = 0;
    std::complex<double> phase{1.0, 0.0};
    double fit_deviation = 0;
};

struct EquatorScan {
    std::vector<EquatorSample> samples;
    double slope = 0;         // least-squares line through the origin
    double nonlinearity = 0;  // max |area - slope * lambda|
    std::vector<double> excluded;  // lambda values with undefined closure
};

// Unit-sphere scenario: start at colatitude theta0 below the equator on
// longitude 0, ride an impulse north to the equator, then east to
// longitude lambda; the phase comes from the spherical triangle against
// the geodesic closure back to the start.  The reported area is the
// positively oriented triangle area (the region actually swept), which for
// a south-pole start is exactly lambda.  Grid points whose closing
// triangle has an antipodal corner pair (lambda = pi when starting at the
// pole of the “wrong” meridian, etc.) are excluded and reported.
EquatorScan equator_scenario(double theta0, const std::vector<double>& lambdas);

// Single lambda evaluation; throws AntipodalUndefined at excluded values.
EquatorSample equator_phase(double theta0, double lambda);

enum class SphereTriangulation { Tetrahedral, Octahedral };

struct SphereTwistExport {
    std::shared_ptr<const SemigroupTable> semigroup;
    Twist twist;
};

// Central projection of the chosen triangulation: the face poset of its
// barycentric subdivision becomes an interval semigroup, and each
// composable pair maps to the signed area of the spherical triangle of its
// three barycenters.  Areas are exact rational multiples of pi here, so
// the exponent is stored in units of pi (tau = 4, i.e. 4 pi steradians)
// after snapping each numerical area to the nearest small fraction and
// validating the snap to 1e-9.
SphereTwistExport export_sphere_twist(SphereTriangulation triangulation);

}

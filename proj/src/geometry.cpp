#include "coherent/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "coherent/simplicial.hpp"

namespace coherent {

namespace {

constexpr double kJoinTol = 1e-12;
constexpr double kPi = 3.14159265358979323846264338328;

double splitmix64_to_unit(unsigned long long& state) {
    // splitmix64 step; top 53 bits give a uniform double in [0, 1).
    state += 0x9E3779B97F4A7C15ULL;
    unsigned long long z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

double gauss(unsigned long long& state) {
    // Box-Muller; the sampler only needs reproducibility, not speed.
    double u1 = splitmix64_to_unit(state);
    double u2 = splitmix64_to_unit(state);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

double dist2(const Vec2& a, const Vec2& b) {
    return std::hypot(a.q - b.q, a.p - b.p);
}

void require_positive(double x, const char* name) {
    if (!(x > 0))
        throw DomainError("NonpositiveParameter",
                          std::string(name) + " must be positive",
                          {{name, std::to_string(x)}});
}

}  // namespace

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 normalized(const Vec3& a) {
    const double n = std::sqrt(dot(a, a));
    if (n == 0)
        throw DomainError("NonpositiveParameter", "cannot normalize the zero vector");
    return {a.x / n, a.y / n, a.z / n};
}

PlanePolyline::PlanePolyline(std::vector<Vec2> vertices)
    : vertices_(std::move(vertices)) {
    if (vertices_.empty())
        throw DomainError("NotComposable", "a path needs at least one vertex");
    cumulative_.push_back(0.0);
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        cumulative_.push_back(cumulative_.back() +
                              dist2(vertices_[i - 1], vertices_[i]));
    length_ = cumulative_.back();
}

Vec2 PlanePolyline::point_at(double t) const {
    if (t <= 0) return vertices_.front();
    if (t >= length_) return vertices_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), t);
    const std::size_t seg = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    const double seg_len = cumulative_[seg + 1] - cumulative_[seg];
    const double f = seg_len > 0 ? (t - cumulative_[seg]) / seg_len : 0.0;
    const Vec2& a = vertices_[seg];
    const Vec2& b = vertices_[seg + 1];
    return {a.q + f * (b.q - a.q), a.p + f * (b.p - a.p)};
}

SphereGeodesicPath::SphereGeodesicPath(std::vector<Vec3> waypoints, double radius)
    : waypoints_(std::move(waypoints)), radius_(radius) {
    require_positive(radius_, "radius");
    if (waypoints_.empty())
        throw DomainError("NotComposable", "a path needs at least one waypoint");
    for (const auto& w : waypoints_)
        if (std::abs(std::sqrt(dot(w, w)) - 1.0) > kJoinTol)
            throw DomainError("NotComposable", "waypoints must be unit vectors");
    cumulative_.push_back(0.0);
    for (std::size_t i = 1; i < waypoints_.size(); ++i) {
        const auto arc = sphere_geodesic(waypoints_[i - 1], waypoints_[i]);
        cumulative_.push_back(cumulative_.back() + arc.angle * radius_);
    }
    length_ = cumulative_.back();
}

Vec3 SphereGeodesicPath::point_at(double t) const {
    if (t <= 0) return waypoints_.front();
    if (t >= length_) return waypoints_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), t);
    const std::size_t seg = static_cast<std::size_t>(it - cumulative_.begin()) - 1;
    const double seg_len = cumulative_[seg + 1] - cumulative_[seg];
    if (seg_len <= 0) return waypoints_[seg];
    const Vec3& a = waypoints_[seg];
    const Vec3& b = waypoints_[seg + 1];
    const double theta = seg_len / radius_;
    const double s = (t - cumulative_[seg]) / radius_;
    const double sin_theta = std::sin(theta);
    const double ca = std::sin(theta - s) / sin_theta;
    const double cb = std::sin(s) / sin_theta;
    return normalized({ca * a.x + cb * b.x, ca * a.y + cb * b.y, ca * a.z + cb * b.z});
}

std::optional<PlanePolyline> moore_concat(const PlanePolyline& a,
                                          const PlanePolyline& b) {
    if (dist2(a.end(), b.start()) > kJoinTol) return std::nullopt;
    std::vector<Vec2> joined = a.vertices();
    joined.insert(joined.end(), b.vertices().begin() + 1, b.vertices().end());
    return PlanePolyline(std::move(joined));
}

std::optional<SphereGeodesicPath> moore_concat(const SphereGeodesicPath& a,
                                               const SphereGeodesicPath& b) {
    const Vec3 d{a.end().x - b.start().x, a.end().y - b.start().y,
                 a.end().z - b.start().z};
    if (std::sqrt(dot(d, d)) > kJoinTol || a.radius() != b.radius())
        return std::nullopt;
    std::vector<Vec3> joined = a.waypoints();
    joined.insert(joined.end(), b.waypoints().begin() + 1, b.waypoints().end());
    return SphereGeodesicPath(std::move(joined), a.radius());
}

double moore_distance(const PlanePolyline& a, const PlanePolyline& b) {
    const double horizon = std::max(a.length(), b.length());
    double best = 0.0;
    auto probe = [&](double t) {
        best = std::max(best, dist2(a.point_at(t), b.point_at(t)));
    };
    probe(0.0);
    probe(horizon);
    double acc = 0.0;
    for (std::size_t i = 1; i < a.vertices().size(); ++i) {
        acc += dist2(a.vertices()[i - 1], a.vertices()[i]);
        probe(acc);
    }
    acc = 0.0;
    for (std::size_t i = 1; i < b.vertices().size(); ++i) {
        acc += dist2(b.vertices()[i - 1], b.vertices()[i]);
        probe(acc);
    }
    for (int k = 1; k < kDistanceSamples; ++k) probe(horizon * k / kDistanceSamples);
    const double dl = std::abs(b.length() - a.length());
    return best + std::sqrt(dl) + dl;
}

double moore_distance(const SphereGeodesicPath& a, const SphereGeodesicPath& b) {
    const double horizon = std::max(a.length(), b.length());
    double best = 0.0;
    auto geo = [&](const Vec3& x, const Vec3& y) {
        return a.radius() * std::atan2(std::sqrt(dot(cross(x, y), cross(x, y))), dot(x, y));
    };
    auto probe = [&](double t) {
        best = std::max(best, geo(a.point_at(t), b.point_at(t)));
    };
    probe(0.0);
    probe(horizon);
    for (const auto* path : {&a, &b}) {
        double acc = 0.0;
        const auto& w = path->waypoints();
        for (std::size_t i = 1; i < w.size(); ++i) {
            acc += sphere_geodesic(w[i - 1], w[i]).angle * path->radius();
            probe(acc);
        }
    }
    for (int k = 1; k < kDistanceSamples; ++k) probe(horizon * k / kDistanceSamples);
    const double dl = std::abs(b.length() - a.length());
    return best + std::sqrt(dl) + dl;
}

double plane_tailleur(const PlanePolyline& a, const PlanePolyline& b) {
    if (dist2(a.end(), b.start()) > kJoinTol)
        throw DomainError("NotComposable", "paths do not compose");
    const Vec2& A = a.start();
    const Vec2& B = a.end();
    const Vec2& C = b.end();
    // Shoelace in (p, q) order: integrates dp ^ dq, so the impulse scenario
    // (momentum leg then position leg) comes out positive.
    return 0.5 * ((B.p - A.p) * (C.q - A.q) - (C.p - A.p) * (B.q - A.q));
}

int maslov_polygon(const PlanePolyline& closed) {
    std::vector<Vec2> v = closed.vertices();
    if (v.size() < 2 || dist2(v.front(), v.back()) > kJoinTol)
        throw DomainError("NotClosed", "polygon must end where it starts");
    v.pop_back();
    // Drop consecutive duplicates; direction is undefined across them.
    std::vector<Vec2> w;
    for (const auto& x : v)
        if (w.empty() || dist2(w.back(), x) > kJoinTol) w.push_back(x);
    if (w.size() >= 2 && dist2(w.front(), w.back()) <= kJoinTol) w.pop_back();
    const int n = static_cast<int>(w.size());
    if (n < 3)
        throw DomainError("NotClosed", "polygon needs at least three distinct vertices");

    auto seg_intersect = [&](const Vec2& p1, const Vec2& p2, const Vec2& p3,
                             const Vec2& p4) {
        auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
            const double x = (b.q - a.q) * (c.p - a.p) - (b.p - a.p) * (c.q - a.q);
            return x > 1e-15 ? 1 : (x < -1e-15 ? -1 : 0);
        };
        const int o1 = orient(p1, p2, p3), o2 = orient(p1, p2, p4);
        const int o3 = orient(p3, p4, p1), o4 = orient(p3, p4, p2);
        if (o1 != o2 && o3 != o4 && o1 && o2 && o3 && o4) return true;
        auto on = [&](const Vec2& a, const Vec2& b, const Vec2& c) {
            return orient(a, b, c) == 0 && c.q >= std::min(a.q, b.q) - 1e-15 &&
                   c.q <= std::max(a.q, b.q) + 1e-15 && c.p >= std::min(a.p, b.p) - 1e-15 &&
                   c.p <= std::max(a.p, b.p) + 1e-15;
        };
        return on(p1, p2, p3) || on(p1, p2, p4) || on(p3, p4, p1) || on(p3, p4, p2);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            // Adjacent edges share one endpoint by construction; skip them.
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (seg_intersect(w[i], w[(i + 1) % n], w[j], w[(j + 1) % n]))
                throw DomainError("SelfIntersecting", "polygon edges cross");
        }

    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        const Vec2& a = w[i];
        const Vec2& b = w[(i + 1) % n];
        const Vec2& c = w[(i + 2) % n];
        const double ux = b.q - a.q, uy = b.p - a.p;
        const double vx = c.q - b.q, vy = c.p - b.p;
        total += std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
    }
    const long turning = std::lround(total / (2.0 * kPi));
    return static_cast<int>(2 * std::labs(turning));
}

PhaseSample free_particle_phase(double p, double v, double t, double h) {
    require_positive(p, "p");
    require_positive(v, "v");
    require_positive(h, "h");
    if (t < 0)
        throw DomainError("NonpositiveParameter", "t must be nonnegative",
                          {{"t", std::to_string(t)}});
    // Half the swept triangle is p*v*t/2; the turning-point doubling makes
    // the accumulated area p*v*t.  Reduce mod h before exponentiating so
    // periodicity is exact.
    double area = std::fmod(p * v * t, h);
    if (area < 0) area += h;
    const double theta = 2.0 * kPi * area / h;
    return {t, area, {std::cos(theta), std::sin(theta)}};
}

Rat de_broglie_wavelength(const Rat& h, const Rat& p) {
    if (p == 0) throw DomainError("ZeroMomentum", "momentum must be nonzero");
    if (h <= 0 || p < 0)
        throw DomainError("NonpositiveParameter", "h and p must be positive");
    return h / p;
}

GeodesicArc sphere_geodesic(const Vec3& a, const Vec3& b) {
    const double d = dot(a, b);
    if (d <= -1.0 + kJoinTol)
        throw DomainError("AntipodalUndefined",
                          "no unique geodesic between antipodal points");
    const Vec3 c = cross(a, b);
    return {a, b, std::atan2(std::sqrt(dot(c, c)), d)};
}

double sphere_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c,
                            double radius) {
    require_positive(radius, "radius");
    for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, a}})
        if (dot(u, v) <= -1.0 + kJoinTol)
            throw DomainError("AntipodalUndefined",
                              "triangle has an antipodal corner pair");
    const double triple = dot(a, cross(b, c));
    const double denom = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    const double omega = 2.0 * std::atan2(triple, denom);
    return omega * radius * radius;
}

double TailleContext::taille() const {
    return space == Space::Plane ? 0.0 : 4.0 * kPi * radius * radius;
}

double sphere_tailleur(const SphereGeodesicPath& a, const SphereGeodesicPath& b) {
    const Vec3 d{a.end().x - b.start().x, a.end().y - b.start().y,
                 a.end().z - b.start().z};
    if (std::sqrt(dot(d, d)) > kJoinTol)
        throw DomainError("NotComposable", "paths do not compose");
    const double r = a.radius();
    const double tau = 4.0 * kPi * r * r;
    double area = std::fmod(sphere_triangle_area(a.start(), a.end(), b.end(), r), tau);
    if (area < 0) area += tau;
    return area;
}

double tailleur_cocycle_residual(const TailleContext& ctx, int samples,
                                 unsigned long long seed) {
    if (samples < 1)
        throw DomainError("NonpositiveParameter", "need at least one sample");
    double worst = 0.0;
    for (int s = 0; s < samples; ++s) {
        unsigned long long stream = seed + static_cast<unsigned long long>(s);
        if (ctx.space == Space::Plane) {
            auto pt = [&]() -> Vec2 {
                return {10.0 * splitmix64_to_unit(stream) - 5.0,
                        10.0 * splitmix64_to_unit(stream) - 5.0};
            };
            const Vec2 A = pt(), B = pt(), C = pt(), D = pt(), M = pt();
            // Paths with a spare interior vertex so concatenation is real
            // work, even though the areas only see endpoints.
            PlanePolyline ab({A, M, B}), bc({B, C}), cd({C, D});
            auto ab_bc = moore_concat(ab, bc);
            auto bc_cd = moore_concat(bc, cd);
            const double delta = plane_tailleur(bc, cd) -
                                 plane_tailleur(*ab_bc, cd) +
                                 plane_tailleur(ab, *bc_cd) -
                                 plane_tailleur(ab, bc);
            worst = std::max(worst, std::abs(delta));
        } else {
            auto pt = [&]() -> Vec3 {
                return normalized({gauss(stream), gauss(stream), gauss(stream)});
            };
            Vec3 corners[4];
            bool ok = false;
            while (!ok) {
                for (auto& c : corners) c = pt();
                ok = true;
                for (int i = 0; i < 4 && ok; ++i)
                    for (int j = i + 1; j < 4; ++j)
                        if (dot(corners[i], corners[j]) <= -1.0 + 1e-6) {
                            ok = false;  // resample near-antipodal draws
                            break;
                        }
            }
            SphereGeodesicPath ab({corners[0], corners[1]}, ctx.radius);
            SphereGeodesicPath bc({corners[1], corners[2]}, ctx.radius);
            SphereGeodesicPath cd({corners[2], corners[3]}, ctx.radius);
            auto ab_bc = moore_concat(ab, bc);
            auto bc_cd = moore_concat(bc, cd);
            const double tau = ctx.taille();
            double delta = std::fmod(sphere_tailleur(bc, cd) -
                                         sphere_tailleur(*ab_bc, cd) +
                                         sphere_tailleur(ab, *bc_cd) -
                                         sphere_tailleur(ab, bc),
                                     tau);
            if (delta < 0) delta += tau;
            worst = std::max(worst, std::min(delta, tau - delta));
        }
    }
    return worst;
}

EquatorSample equator_phase(double theta0, double lambda) {
    if (!(theta0 > 0) || theta0 > kPi / 2.0 + 1e-12)
        throw DomainError("NonpositiveParameter",
                          "colatitude must lie in (0, pi/2]",
                          {{"theta0", std::to_string(theta0)}});
    const Vec3 start{std::cos(theta0), 0.0, -std::sin(theta0)};
    const Vec3 e0{1.0, 0.0, 0.0};
    const Vec3 el{std::cos(lambda), std::sin(lambda), 0.0};
    // Positively oriented area of the swept triangle; |signed| keeps the
    // south-pole case at exactly lambda for lambda in [0, pi).
    const double area = std::abs(sphere_triangle_area(start, e0, el, 1.0));
    const double theta = area / 2.0;  // 2 pi / taille with taille = 4 pi
    return {lambda, area, {std::cos(theta), std::sin(theta)}, 0.0};
}

EquatorScan equator_scenario(double theta0, const std::vector<double>& lambdas) {
    EquatorScan scan;
    for (double l : lambdas) {
        try {
            scan.samples.push_back(equator_phase(theta0, l));
        } catch (const DomainError& e) {
            if (e.variant() != "AntipodalUndefined") throw;
            scan.excluded.push_back(l);
        }
    }
    double num = 0.0, den = 0.0;
    for (const auto& s : scan.samples) {
        num += s.lambda * s.area;
        den += s.lambda * s.lambda;
    }
    scan.slope = den > 0 ? num / den : 0.0;
    for (auto& s : scan.samples) {
        s.fit_deviation = std::abs(s.area - scan.slope * s.lambda);
        scan.nonlinearity = std::max(scan.nonlinearity, s.fit_deviation);
    }
    return scan;
}

SphereTwistExport export_sphere_twist(SphereTriangulation triangulation) {
    std::vector<std::string> vertices;
    std::map<std::string, Vec3> coords;
    std::vector<std::vector<std::string>> faces;
    if (triangulation == SphereTriangulation::Tetrahedral) {
        const double s = 1.0 / std::sqrt(3.0);
        vertices = {"t0", "t1", "t2", "t3"};
        coords["t0"] = {s, s, s};
        coords["t1"] = {s, -s, -s};
        coords["t2"] = {-s, s, -s};
        coords["t3"] = {-s, -s, s};
        faces = {{"t0", "t1", "t2"}, {"t0", "t1", "t3"},
                 {"t0", "t2", "t3"}, {"t1", "t2", "t3"}};
    } else {
        vertices = {"px", "nx", "py", "ny", "pz", "nz"};
        coords["px"] = {1, 0, 0};
        coords["nx"] = {-1, 0, 0};
        coords["py"] = {0, 1, 0};
        coords["ny"] = {0, -1, 0};
        coords["pz"] = {0, 0, 1};
        coords["nz"] = {0, 0, -1};
        for (const char* x : {"px", "nx"})
            for (const char* y : {"py", "ny"})
                for (const char* z : {"pz", "nz"})
                    faces.push_back({x, y, z});
    }
    SimplicialComplex complex(vertices, faces);
    Poset face_poset = barycentric_subdivision(complex);
    auto sg = std::make_shared<const SemigroupTable>(poset_semigroup(face_poset));

    // Barycenter of each simplex, centrally projected onto the sphere.
    std::map<std::string, Vec3> point;
    for (const auto& s : complex.simplices()) {
        Vec3 bary{0, 0, 0};
        for (int v : s) {
            const Vec3& c = coords.at(complex.vertices()[v]);
            bary.x += c.x;
            bary.y += c.y;
            bary.z += c.z;
        }
        point[complex.simplex_name(s)] = normalized(bary);
    }

    // Interval names are e(sigma;rho); peel the simplex names back out.
    auto parse_interval = [&](const std::string& name) {
        const auto semi = name.find(';');
        return std::pair{name.substr(2, semi - 2),
                         name.substr(semi + 1, name.size() - semi - 2)};
    };

    Cochain exponent(sg, 2, CoefficientGroup::mod(Rat(4)));
    for (const auto& pr : sg->composable_tuples(2)) {
        auto [lo1, hi1] = parse_interval(sg->element(pr[0]));
        auto [lo2, hi2] = parse_interval(sg->element(pr[1]));
        const double area =
            sphere_triangle_area(point.at(lo1), point.at(hi1), point.at(hi2), 1.0);
        // The barycentric cells tile the sphere symmetrically, so each area
        // is an exact rational multiple of pi; snap and double-check.
        const Rat in_pi = nearest_rational(area / kPi, 96);
        if (std::abs(area - as_double(in_pi) * kPi) > 1e-9)
            throw DomainError("NotACocycle",
                              "triangle area is not a small rational multiple of pi",
                              {{"area", std::to_string(area)}});
        exponent.set(pr, in_pi);
    }
    return {sg, circle_twist(exponent)};
}

}

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace obtusity::geom {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

// Affine site inside the unit cube: offset plus up to three cube axes scaled
// by independent Unif(0,1) draws.
struct SiteSpec {
    Vec3 offset{};
    std::array<Vec3, 3> axes{};
    int dimension = 0;
};

template <class Rng>
Vec3 sample_site(const SiteSpec& site, Rng&& rng) {
    Vec3 p = site.offset;
    for (int i = 0; i < site.dimension; ++i) p = p + rng() * site.axes[i];
    return p;
}

struct CubeConfiguration {
    std::string label;
    std::array<SiteSpec, 3> sites;
};

inline constexpr std::array<std::string_view, 8> kCubeConfigurationLabels = {
    "333", "322r", "321r", "222r", "320", "311", "221r", "221e",
};

// Point placements for the configurations that survive in the final solution.
// Digits give the site dimensions; "r" marks parallel opposite faces, "e"
// adjacent (edge-sharing) faces.
inline CubeConfiguration cube_configuration(std::string_view label) {
    const Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    const SiteSpec interior{{0, 0, 0}, {e1, e2, e3}, 3};
    const SiteSpec face_z0{{0, 0, 0}, {e1, e2}, 2};
    const SiteSpec face_z1{{0, 0, 1}, {e1, e2}, 2};
    const SiteSpec face_x0{{0, 0, 0}, {e2, e3}, 2};
    const SiteSpec face_x1{{1, 0, 0}, {e2, e3}, 2};
    const SiteSpec edge_z{{0, 0, 0}, {e3}, 1};
    const SiteSpec edge_top_x{{0, 0, 1}, {e1}, 1};
    const SiteSpec edge_far_y{{1, 0, 0}, {e2}, 1};
    const SiteSpec vertex_z1{{0, 0, 1}, {}, 0};

    if (label == "333") return {"333", {interior, interior, interior}};
    if (label == "322r") return {"322r", {interior, face_z0, face_z1}};
    if (label == "321r") return {"321r", {interior, face_z0, edge_top_x}};
    if (label == "222r") return {"222r", {face_x0, face_z0, face_z1}};
    if (label == "320") return {"320", {interior, face_z0, vertex_z1}};
    if (label == "311") return {"311", {interior, edge_z, edge_far_y}};
    if (label == "221r") return {"221r", {face_z0, face_z1, edge_z}};
    if (label == "221e") return {"221e", {face_z0, face_x1, edge_z}};
    throw std::invalid_argument("cube_configuration: unknown label '" + std::string(label) + "'");
}

enum class BodyKind { UnitSquare, UnitCube, Disk, Ball3, EquilateralTriangle };

struct Body {
    BodyKind kind = BodyKind::UnitCube;
    int dimension = 3;
};

inline Body make_body(BodyKind kind) {
    switch (kind) {
        case BodyKind::UnitSquare:
        case BodyKind::Disk:
        case BodyKind::EquilateralTriangle:
            return {kind, 2};
        case BodyKind::UnitCube:
        case BodyKind::Ball3:
            return {kind, 3};
    }
    throw std::invalid_argument("make_body: bad kind");
}

inline Body parse_body(std::string_view id) {
    if (id == "square") return make_body(BodyKind::UnitSquare);
    if (id == "cube") return make_body(BodyKind::UnitCube);
    if (id == "disk") return make_body(BodyKind::Disk);
    if (id == "ball") return make_body(BodyKind::Ball3);
    if (id == "triangle") return make_body(BodyKind::EquilateralTriangle);
    throw std::invalid_argument("parse_body: unknown body '" + std::string(id) + "'");
}

inline std::string_view body_id(BodyKind kind) {
    switch (kind) {
        case BodyKind::UnitSquare: return "square";
        case BodyKind::UnitCube: return "cube";
        case BodyKind::Disk: return "disk";
        case BodyKind::Ball3: return "ball";
        case BodyKind::EquilateralTriangle: return "triangle";
    }
    throw std::invalid_argument("body_id: bad kind");
}

// Uniform point in the body. Disk and Ball3 reject from the bounding box
// (2 resp. 3 draws per attempt); the triangle folds a parallelogram sample.
template <class Rng>
Vec3 sample_body(const Body& body, Rng&& rng) {
    switch (body.kind) {
        case BodyKind::UnitSquare:
            return {rng(), rng(), 0.0};
        case BodyKind::UnitCube:
            return {rng(), rng(), rng()};
        case BodyKind::Disk:
            for (;;) {
                double x = 2.0 * rng() - 1.0;
                double y = 2.0 * rng() - 1.0;
                if (x * x + y * y <= 1.0) return {x, y, 0.0};
            }
        case BodyKind::Ball3:
            for (;;) {
                double x = 2.0 * rng() - 1.0;
                double y = 2.0 * rng() - 1.0;
                double z = 2.0 * rng() - 1.0;
                if (x * x + y * y + z * z <= 1.0) return {x, y, z};
            }
        case BodyKind::EquilateralTriangle: {
            double u = rng();
            double v = rng();
            if (u + v > 1.0) {
                u = 1.0 - u;
                v = 1.0 - v;
            }
            return {u + 0.5 * v, 0.8660254037844386 * v, 0.0};
        }
    }
    throw std::invalid_argument("sample_body: bad kind");
}

// Indicator triple (obtuse at x, at y, at z) with strict inequalities; a
// right angle counts as non-obtuse.
inline std::array<bool, 3> obtuse_parts(const Vec3& x, const Vec3& y, const Vec3& z) {
    return {dot(y - x, z - x) < 0.0, dot(z - y, x - y) < 0.0, dot(x - z, y - z) < 0.0};
}

}  // namespace obtusity::geom

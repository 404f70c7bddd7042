#pragma once

#include <cmath>
#include <stdexcept>

namespace draco {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Axis-aligned rectangular sensing field spanned by two opposite corners.
// c1 is component-wise strictly below c2.
struct FieldGeometry {
    Point c1;
    Point c2;

    static FieldGeometry from_corners(Point lo, Point hi) {
        if (!(lo.x < hi.x) || !(lo.y < hi.y)) {
            throw std::invalid_argument("FieldGeometry: c1 must be component-wise < c2");
        }
        return FieldGeometry{lo, hi};
    }

    static FieldGeometry square(double side) {
        return from_corners({0.0, 0.0}, {side, side});
    }

    double width() const { return c2.x - c1.x; }
    double height() const { return c2.y - c1.y; }
    double area() const { return width() * height(); }

    bool contains(const Point& p) const {
        return p.x >= c1.x && p.x <= c2.x && p.y >= c1.y && p.y <= c2.y;
    }

    friend bool operator==(const FieldGeometry& a, const FieldGeometry& b) {
        return a.c1 == b.c1 && a.c2 == b.c2;
    }
};

} // namespace draco

#pragma once

#include <compare>

namespace spcl {

/// Axis-aligned box with real-valued corners, x0 < x1 and y0 < y1.
/// Degenerate (zero or negative area) boxes are rejected at construction.
struct BBox {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;

    BBox() = default;
    BBox(double x0, double y0, double x1, double y1);

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return width() * height(); }

    friend bool operator==(const BBox&, const BBox&) = default;
    friend auto operator<=>(const BBox&, const BBox&) = default;
};

/// Intersection over union of two boxes. Symmetric, in [0,1],
/// 1 exactly when the boxes coincide, 0 when they are disjoint.
double iou(const BBox& a, const BBox& b);

}  // namespace spcl

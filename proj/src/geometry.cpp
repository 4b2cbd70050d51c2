#include "rmot/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "rmot/error.hpp"

namespace rmot {

BBox::BBox(double x1, double y1, double x2, double y2)
    : x1_(x1), y1_(y1), x2_(x2), y2_(y2), present_(true) {
    if (!std::isfinite(x1) || !std::isfinite(y1) || !std::isfinite(x2) || !std::isfinite(y2)) {
        throw ValidationError("box coordinates must be finite");
    }
    if (x1 > x2 || y1 > y2) {
        throw ValidationError("box coordinates must satisfy x1 <= x2 and y1 <= y2");
    }
}

bool BBox::operator==(const BBox& other) const {
    if (present_ != other.present_) return false;
    if (!present_) return true;
    return x1_ == other.x1_ && y1_ == other.y1_ && x2_ == other.x2_ && y2_ == other.y2_;
}

double iou(const BBox& a, const BBox& b) {
    if (a.is_absent() || b.is_absent()) return 0.0;
    const double ix1 = std::max(a.x1(), b.x1());
    const double iy1 = std::max(a.y1(), b.y1());
    const double ix2 = std::min(a.x2(), b.x2());
    const double iy2 = std::min(a.y2(), b.y2());
    const double inter = std::max(0.0, ix2 - ix1) * std::max(0.0, iy2 - iy1);
    const double uni = a.area() + b.area() - inter;
    if (uni <= 0.0) return 0.0;
    return inter / uni;
}

BBox clamp_to_frame(const BBox& b, double width, double height) {
    if (width <= 0.0 || height <= 0.0) {
        throw ValidationError("frame dimensions must be positive");
    }
    if (b.is_absent()) return b;
    const double x1 = std::clamp(b.x1(), 0.0, width);
    const double y1 = std::clamp(b.y1(), 0.0, height);
    const double x2 = std::clamp(b.x2(), 0.0, width);
    const double y2 = std::clamp(b.y2(), 0.0, height);
    if (x2 - x1 <= 0.0 || y2 - y1 <= 0.0) return BBox::absent();
    return BBox(x1, y1, x2, y2);
}

BBox Tracklet::box_at(int frame) const {
    auto it = boxes.find(frame);
    return it == boxes.end() ? BBox::absent() : it->second;
}

std::optional<BBox> Tracklet::present_at(int frame) const {
    auto it = boxes.find(frame);
    if (it == boxes.end() || it->second.is_absent()) return std::nullopt;
    return it->second;
}

int Tracklet::present_count() const {
    int n = 0;
    for (const auto& [frame, box] : boxes) {
        if (box.is_present()) ++n;
    }
    return n;
}

std::optional<int> Tracklet::last_present_frame(int upto_frame) const {
    auto it = boxes.upper_bound(upto_frame);
    while (it != boxes.begin()) {
        --it;
        if (it->second.is_present()) return it->first;
    }
    return std::nullopt;
}

const AnnotatedObject* VideoAnnotation::find_object(const std::string& object_id) const {
    for (const auto& obj : objects) {
        if (obj.object_id == object_id) return &obj;
    }
    return nullptr;
}

const Expression* VideoAnnotation::find_expression(const std::string& expression_id) const {
    for (const auto& expr : expressions) {
        if (expr.expression_id == expression_id) return &expr;
    }
    return nullptr;
}

}  // namespace rmot

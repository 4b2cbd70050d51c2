#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rmot {

/// Axis-aligned box in pixel coordinates (origin top-left), or the
/// distinguished absent state used when an object is unobserved in a frame.
/// Present boxes satisfy x1 <= x2, y1 <= y2 with finite coordinates.
/// Boxes are treated as half-open real intervals [x1,x2) x [y1,y2).
class BBox {
public:
    /// Absent box.
    BBox() = default;

    /// Present box; throws ValidationError on non-finite or inverted coordinates.
    BBox(double x1, double y1, double x2, double y2);

    static BBox absent() { return BBox(); }

    bool is_present() const { return present_; }
    bool is_absent() const { return !present_; }

    double x1() const { return x1_; }
    double y1() const { return y1_; }
    double x2() const { return x2_; }
    double y2() const { return y2_; }

    double width() const { return present_ ? x2_ - x1_ : 0.0; }
    double height() const { return present_ ? y2_ - y1_ : 0.0; }
    double area() const { return width() * height(); }

    bool operator==(const BBox& other) const;
    bool operator!=(const BBox& other) const { return !(*this == other); }

private:
    double x1_ = 0.0, y1_ = 0.0, x2_ = 0.0, y2_ = 0.0;
    bool present_ = false;
};

/// Intersection-over-union of two boxes. Total: returns 0 when either box is
/// absent, and 0 when the union has zero area.
double iou(const BBox& a, const BBox& b);

/// Clip a box to [0,width] x [0,height]. A box whose clipped area is zero
/// becomes absent; absent stays absent. Requires width, height > 0.
BBox clamp_to_frame(const BBox& b, double width, double height);

/// One object identity's box per frame. Frame indices are 0-based; entries
/// may be explicitly absent (distinct from missing, which also means
/// "no observation" but round-trips differently on disk).
struct Tracklet {
    std::string track_id;
    std::map<int, BBox> boxes;

    /// Box at a frame, or absent when the frame has no entry.
    BBox box_at(int frame) const;

    /// Present box at a frame, if any.
    std::optional<BBox> present_at(int frame) const;

    /// Number of frames with a present box.
    int present_count() const;

    /// Last frame index <= upto_frame with a present box, or nullopt.
    std::optional<int> last_present_frame(int upto_frame) const;
};

struct AnnotatedObject {
    std::string object_id;
    std::string category;
    Tracklet track;
};

struct Expression {
    std::string expression_id;
    std::string text;
    std::vector<std::string> object_ids;
};

/// Ground-truth record for one video: frame geometry, tracked objects and
/// the referring expressions over them.
struct VideoAnnotation {
    std::string video_id;
    int width = 0;
    int height = 0;
    int num_frames = 0;
    std::vector<std::string> frame_paths;
    std::vector<AnnotatedObject> objects;
    std::vector<Expression> expressions;

    const AnnotatedObject* find_object(const std::string& object_id) const;
    const Expression* find_expression(const std::string& expression_id) const;
};

/// Tracklets a model emitted for one (video, expression) pair.
struct PredictionSet {
    std::string video_id;
    std::string expression_id;
    std::vector<Tracklet> tracklets;
};

}  // namespace rmot

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rmot/geometry.hpp"

namespace rmot {

/// Input to prompt construction: the referring expression, plus optional
/// boxes from the previous clip's tracklets when prompting a follow-on clip.
struct PromptSpec {
    std::string expression_text;
    std::optional<std::map<std::string, BBox>> continuation_boxes;
};

/// Builds the tracking prompt:
///   `<video> Please locate all objects in the video based on this expression: {expression}.`
/// When continuation boxes are set, appends a block of the form
///   `Previous boxes:` / `Object i: [x1, y1, x2, y2]` (one line per tracked
/// object, in track_id order). Throws ValidationError when the expression is
/// empty after trimming.
std::string build_prompt(const PromptSpec& spec);

enum class ParseMode { kStrict, kLenient };

struct ParseWarning {
    int line = 0;
    std::string message;
};

/// Result of parsing model output text. Warnings are empty iff the input was
/// strictly well-formed.
struct ParseReport {
    PredictionSet prediction;
    std::vector<ParseWarning> warnings;
};

/// Serializes tracklets into the structured plain-text prediction format:
///   `Object 1: Frame 1: [x1, y1, x2, y2], Frame 2: [], ...; Object 2: ...`
/// Objects are emitted in track_id order with 1-based positional indices;
/// frames run 1..num_frames in the text (0-based internally); absent or
/// missing frames serialize as `[]`; coordinates round to nearest integer.
/// Throws ValidationError when a frame index falls outside [0, num_frames).
std::string serialize_prediction(const PredictionSet& p, int num_frames);

/// Parses the structured prediction format. Any reasoning preamble before the
/// first `Object N:` header is ignored. Strict mode rejects every deviation
/// from the serialized form; lenient mode recovers (re-sorting out-of-order
/// frames, dropping frames beyond num_frames, accepting float coordinates,
/// tolerating missing separators) and records one warning per recovery.
/// Parsed tracklets get positional ids `obj1`, `obj2`, ...; absent frames are
/// left out of the box map. Throws ParseError when no object header exists or
/// when strict mode hits an irregularity.
ParseReport parse_prediction(const std::string& text, int num_frames, ParseMode mode);

}  // namespace rmot

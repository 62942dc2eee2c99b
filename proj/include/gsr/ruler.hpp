#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsr/errors.hpp"

namespace gsr {

using Mark = std::uint64_t;

/// A ruler: a strictly increasing sequence of nonnegative integer marks.
/// Immutable after construction; the empty ruler is allowed.
class Ruler {
  public:
    Ruler() = default;

    // Sorts the input; duplicate marks are an input_error, not merged.
    explicit Ruler(std::vector<Mark> marks);

    const std::vector<Mark>& marks() const { return marks_; }
    std::size_t size() const { return marks_.size(); }
    bool empty() const { return marks_.empty(); }
    bool contains(Mark m) const;

    Mark front() const { return marks_.front(); }
    Mark back() const { return marks_.back(); }

    bool operator==(const Ruler&) const = default;

  private:
    std::vector<Mark> marks_;
};

// True iff all pairwise differences are distinct. Empty and singleton
// rulers are Golomb by convention.
bool is_golomb(const Ruler& r);

// Shift so the smallest mark is 0. Errors on the empty ruler.
Ruler canonical_form(const Ruler& r);

// max(r) - min(r). Errors on the empty ruler.
Mark length(const Ruler& r);

// True iff every integer distance 1..length(r) is measured by some pair.
// Requires at least 2 marks.
bool is_perfect(const Ruler& r);

// A consecutive ruler {0, 1, ..., count-1}.
Ruler consecutive_ruler(std::size_t count);

// Text format: ASCII decimal marks separated by whitespace/newlines,
// '#' starts a comment that runs to end of line.
Ruler parse_ruler_text(std::string_view text);
Ruler load_ruler_file(const std::filesystem::path& path);
std::string format_ruler(const Ruler& r);

} // namespace gsr

#include "gsr/ruler.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace gsr {

Ruler::Ruler(std::vector<Mark> marks) : marks_(std::move(marks)) {
    std::sort(marks_.begin(), marks_.end());
    auto dup = std::adjacent_find(marks_.begin(), marks_.end());
    if (dup != marks_.end()) {
        throw input_error("duplicate mark " + std::to_string(*dup) + " in ruler");
    }
}

bool Ruler::contains(Mark m) const {
    return std::binary_search(marks_.begin(), marks_.end(), m);
}

bool is_golomb(const Ruler& r) {
    const auto& m = r.marks();
    std::unordered_set<Mark> seen;
    seen.reserve(m.size() * m.size() / 2 + 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (!seen.insert(m[j] - m[i]).second) {
                return false;
            }
        }
    }
    return true;
}

Ruler canonical_form(const Ruler& r) {
    if (r.empty()) {
        throw input_error("canonical form of an empty ruler is undefined");
    }
    std::vector<Mark> shifted;
    shifted.reserve(r.size());
    const Mark base = r.front();
    for (Mark m : r.marks()) {
        shifted.push_back(m - base);
    }
    return Ruler(std::move(shifted));
}

Mark length(const Ruler& r) {
    if (r.empty()) {
        throw input_error("length of an empty ruler is undefined");
    }
    return r.back() - r.front();
}

bool is_perfect(const Ruler& r) {
    if (r.size() < 2) {
        throw input_error("perfection is undefined for rulers with fewer than 2 marks");
    }
    const Mark len = length(r);
    // All differences lie in [1, len]; perfection means all of them occur,
    // i.e. the number of distinct differences equals len. Avoids walking
    // the (possibly huge) distance range.
    const auto& m = r.marks();
    if (len > static_cast<Mark>(m.size()) * (m.size() - 1) / 2) {
        return false;
    }
    std::unordered_set<Mark> diffs;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            diffs.insert(m[j] - m[i]);
        }
    }
    return diffs.size() == len;
}

Ruler consecutive_ruler(std::size_t count) {
    std::vector<Mark> marks(count);
    for (std::size_t i = 0; i < count; ++i) {
        marks[i] = static_cast<Mark>(i);
    }
    return Ruler(std::move(marks));
}

Ruler parse_ruler_text(std::string_view text) {
    std::vector<Mark> marks;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == '#') {
            while (i < n && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            Mark value = 0;
            std::size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                Mark digit = static_cast<Mark>(text[i] - '0');
                if (value > (UINT64_MAX - digit) / 10) {
                    throw guard_error("mark does not fit in 64 bits: " +
                                      std::string(text.substr(start, i - start + 1)) + "...");
                }
                value = value * 10 + digit;
                ++i;
            }
            if (i < n && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') {
                throw input_error("malformed mark token near '" +
                                  std::string(text.substr(start, i - start + 1)) + "'");
            }
            marks.push_back(value);
        } else {
            throw input_error(std::string("unexpected character '") + c + "' in ruler text");
        }
    }
    return Ruler(std::move(marks));
}

Ruler load_ruler_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open ruler file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ruler_text(buf.str());
}

std::string format_ruler(const Ruler& r) {
    std::string out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(r.marks()[i]);
    }
    return out;
}

} // namespace gsr

#include "evscan/events.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace evscan::events {

namespace {

int parse_int_strict(const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
    return v;
}

double parse_double_strict(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters in '" + s + "'");
    return v;
}

}  // namespace

ParseResult parse_events(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;
    double prev_t = 0.0;
    bool have_prev = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        std::string t;
        while (fields >> t) tok.push_back(t);
        if (tok.empty()) continue;

        try {
            if (first_content_line && tok.size() == 2) {
                // optional "W H" header
                result.dims = SensorDims{parse_int_strict(tok[0]), parse_int_strict(tok[1])};
                if (result.dims->width < 1 || result.dims->height < 1)
                    throw std::invalid_argument("non-positive sensor dims");
                first_content_line = false;
                continue;
            }
            first_content_line = false;
            if (tok.size() != 4) throw std::invalid_argument("expected 4 fields");
            Event e;
            e.t = parse_double_strict(tok[0]);
            e.x = parse_int_strict(tok[1]);
            e.y = parse_int_strict(tok[2]);
            const int p = parse_int_strict(tok[3]);
            if (p != -1 && p != 0 && p != 1)
                throw std::invalid_argument("polarity must be -1, 0 or 1");
            e.p = (p == 0) ? -1 : p;
            if (!std::isfinite(e.t)) throw std::invalid_argument("non-finite timestamp");
            if (e.x < 0 || e.y < 0) throw std::invalid_argument("negative pixel");
            if (have_prev && e.t < prev_t) {
                if (result.nonmonotonic_count == 0)
                    result.first_nonmonotonic_line = line_no;
                ++result.nonmonotonic_count;
            }
            prev_t = e.t;
            have_prev = true;
            result.events.push_back(e);
        } catch (const std::exception& ex) {
            throw std::runtime_error("malformed event line " + std::to_string(line_no) +
                                     ": " + ex.what());
        }
    }
    return result;
}

ParseResult parse_events_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    return parse_events(in);
}

GroupResult group_events(const std::vector<Event>& events,
                         const std::vector<double>& frame_timestamps) {
    if (frame_timestamps.size() < 2)
        throw std::invalid_argument("group_events needs at least 2 boundaries");
    for (std::size_t i = 1; i < frame_timestamps.size(); ++i)
        if (!(frame_timestamps[i - 1] < frame_timestamps[i]))
            throw std::invalid_argument("frame timestamps must be strictly increasing");

    GroupResult result;
    result.groups.resize(frame_timestamps.size() - 1);
    for (std::size_t k = 0; k + 1 < frame_timestamps.size(); ++k) {
        result.groups[k].window_start = frame_timestamps[k];
        result.groups[k].window_end = frame_timestamps[k + 1];
    }
    for (const Event& e : events) {
        if (e.t < frame_timestamps.front()) {
            ++result.dropped_before;
            continue;
        }
        if (e.t >= frame_timestamps.back()) {
            ++result.dropped_after;
            continue;
        }
        // group k holds s_k <= t < s_{k+1}
        const auto it = std::upper_bound(frame_timestamps.begin(),
                                         frame_timestamps.end(), e.t);
        const std::size_t k = static_cast<std::size_t>(it - frame_timestamps.begin()) - 1;
        result.groups[k].events.push_back(e);
    }
    for (EventGroup& g : result.groups)
        std::stable_sort(g.events.begin(), g.events.end(),
                         [](const Event& a, const Event& b) { return a.t < b.t; });
    return result;
}

double VoxelGrid::mass() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
}

VoxelGrid voxelize(const EventGroup& group, int bins, int height, int width) {
    if (bins < 1 || height < 1 || width < 1)
        throw std::invalid_argument("voxelize: non-positive grid dims");
    const double span = group.window_end - group.window_start;
    if (!(span > 0.0)) throw std::invalid_argument("voxelize: zero-length window");

    VoxelGrid grid(bins, height, width);
    const double scale = (bins - 1) / span;
    for (const Event& e : group.events) {
        if (e.x < 0 || e.x >= width || e.y < 0 || e.y >= height)
            throw std::invalid_argument("voxelize: pixel out of range");
        const double tstar = (e.t - group.window_start) * scale;
        // bilinear weights onto the two nearest integer bins, clamped to 0..B-1
        const int lo = static_cast<int>(std::floor(tstar));
        for (int b = lo; b <= lo + 1; ++b) {
            if (b < 0 || b >= bins) continue;
            const double w = 1.0 - std::abs(b - tstar);
            if (w > 0.0) grid.at(b, e.y, e.x) += e.p * w;
        }
    }
    return grid;
}

}  // namespace evscan::events

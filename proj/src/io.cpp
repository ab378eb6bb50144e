#include "tenrange/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tenrange/errors.hpp"

namespace tenrange::io {

namespace {

using ordered_json = nlohmann::ordered_json;

double number_field(const ordered_json& j, const char* where) {
    if (!j.is_number()) throw parse_error(std::string("expected a number in ") + where);
    return j.get<double>();
}

}  // namespace

Tensor parse_tensor(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw parse_error(std::string("malformed tensor document: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("tensor document must be a JSON object");
    if (!doc.contains("shape") || !doc.contains("row_modes") || !doc.contains("data"))
        throw parse_error("tensor document needs fields shape, row_modes, data");

    const ordered_json& jshape = doc["shape"];
    if (!jshape.is_array() || jshape.empty())
        throw parse_error("field shape must be a nonempty array of positive extents");
    Shape shape;
    for (const auto& v : jshape) {
        if (!v.is_number_integer() || v.get<long long>() < 1)
            throw parse_error("field shape must contain positive integers");
        shape.push_back(v.get<std::size_t>());
    }

    const ordered_json& jrow = doc["row_modes"];
    if (!jrow.is_number_integer() || jrow.get<long long>() < 0 ||
        jrow.get<std::size_t>() > shape.size())
        throw parse_error("field row_modes must be an integer in [0, number of modes]");
    const std::size_t row_modes = jrow.get<std::size_t>();

    const ordered_json& jdata = doc["data"];
    if (!jdata.is_array()) throw parse_error("field data must be an array of [re, im] pairs");
    std::vector<scalar> entries;
    entries.reserve(jdata.size());
    std::size_t pos = 0;
    for (const auto& pair : jdata) {
        ++pos;
        if (!pair.is_array() || pair.size() != 2)
            throw parse_error("data entry " + std::to_string(pos) + " is not an [re, im] pair");
        const double re = number_field(pair[0], "data");
        const double im = number_field(pair[1], "data");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw parse_error("data entry " + std::to_string(pos) + " is not finite");
        entries.emplace_back(re, im);
    }

    try {
        return Tensor(std::move(shape), row_modes, std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("inconsistent tensor document: ") + e.what());
    }
}

std::string serialize_tensor(const Tensor& a) {
    ordered_json doc;
    doc["shape"] = a.shape();
    doc["row_modes"] = a.row_modes();
    ordered_json data = ordered_json::array();
    for (std::size_t k = 0; k < a.size(); ++k)
        data.push_back(ordered_json::array({a[k].real(), a[k].imag()}));
    doc["data"] = std::move(data);
    return doc.dump() + "\n";
}

Tensor read_tensor_file(const std::string& path) {
    return parse_tensor(read_text_file(path));
}

void write_tensor_file(const std::string& path, const Tensor& a) {
    write_text_file(path, serialize_tensor(a));
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string boundary_csv(const numrange::Boundary& b) {
    std::string out = "theta,support,re,im\n";
    for (const numrange::BoundarySample& s : b.samples) {
        out += format_double(s.theta);
        out += ',';
        out += format_double(s.support);
        out += ',';
        out += format_double(s.point.real());
        out += ',';
        out += format_double(s.point.imag());
        out += '\n';
    }
    return out;
}

std::string boundary_svg(const numrange::Boundary& b, const std::vector<scalar>& eigenvalues) {
    constexpr double width = 800, height = 600, margin_frac = 0.05;

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            xmin = xmax = x;
            ymin = ymax = y;
            first = false;
        } else {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    };
    for (const auto& s : b.samples) grow(s.point.real(), s.point.imag());
    for (const scalar& e : eigenvalues) grow(e.real(), e.imag());
    if (first) grow(0.0, 0.0);
    double span = std::max(xmax - xmin, ymax - ymin);
    if (span <= 0) span = std::max(1.0, std::abs(xmax));  // degenerate range: a single point
    const double pad = margin_frac * span;
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;

    // equal-aspect scale, centered in the viewport
    const double sx = width / (xmax - xmin), sy = height / (ymax - ymin);
    const double s = std::min(sx, sy);
    const double xoff = (width - s * (xmax - xmin)) / 2.0;
    const double yoff = (height - s * (ymax - ymin)) / 2.0;
    auto px = [&](double x) { return xoff + s * (x - xmin); };
    auto py = [&](double y) { return height - (yoff + s * (y - ymin)); };

    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
           "height=\"600\" viewBox=\"0 0 800 600\">\n";
    svg << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    if (!b.samples.empty()) {
        svg << "<polygon fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
        for (std::size_t k = 0; k < b.samples.size(); ++k) {
            if (k) svg << ' ';
            svg << fmt(px(b.samples[k].point.real())) << ',' << fmt(py(b.samples[k].point.imag()));
        }
        svg << "\"/>\n";
    }
    for (const scalar& e : eigenvalues) {
        const double cx = px(e.real()), cy = py(e.imag());
        svg << "<path stroke=\"#d62728\" stroke-width=\"1.5\" d=\"M " << fmt(cx - 5) << ' '
            << fmt(cy) << " L " << fmt(cx + 5) << ' ' << fmt(cy) << " M " << fmt(cx) << ' '
            << fmt(cy - 5) << " L " << fmt(cx) << ' ' << fmt(cy + 5) << "\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw parse_error("failed while writing " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace tenrange::io

#include "core/svg.hpp"

#include <algorithm>
#include <fstream>
#include <system_error>

#include "core/csv.hpp"
#include "core/errors.hpp"

namespace tendex {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kPad = 40.0;

const char* kPalette[] = {"#555555", "#d62728", "#1f77b4", "#2ca02c",
                          "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

} // namespace

void write_plot_svg(const std::vector<TimeSeries>& series_list,
                    const std::filesystem::path& path) {
    if (series_list.empty())
        throw Error(Status::InvalidArgument, "IoError: nothing to plot");

    double ymin = series_list[0][0], ymax = ymin;
    std::size_t max_len = 1;
    for (const auto& s : series_list) {
        validate_series(s);
        max_len = std::max(max_len, s.size());
        for (double v : s.values) {
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (ymax == ymin) { // flat data still needs a nonzero vertical range
        ymax += 0.5;
        ymin -= 0.5;
    }
    const double xspan = static_cast<double>(std::max<std::size_t>(max_len - 1, 1));
    const auto sx = [&](std::size_t i) {
        return kPad + (kWidth - 2 * kPad) * static_cast<double>(i) / xspan;
    };
    const auto sy = [&](double v) {
        return kHeight - kPad - (kHeight - 2 * kPad) * (v - ymin) / (ymax - ymin);
    };

    std::string body;
    body += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
            format_double(kWidth) + " " + format_double(kHeight) + "\">\n";
    body += "<rect x=\"" + format_double(kPad) + "\" y=\"" + format_double(kPad) + "\" width=\"" +
            format_double(kWidth - 2 * kPad) + "\" height=\"" + format_double(kHeight - 2 * kPad) +
            "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    for (std::size_t s = 0; s < series_list.size(); ++s) {
        const auto& series = series_list[s];
        const char* stroke = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        body += "<polyline id=\"series-" + std::to_string(s) + "\" fill=\"none\" stroke=\"" +
                stroke + "\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (i > 0) body += ' ';
            body += format_double(sx(i)) + "," + format_double(sy(series[i]));
        }
        body += "\">";
        if (!series.label.empty()) body += "<title>" + series.label + "</title>";
        body += "</polyline>\n";
    }
    body += "</svg>\n";

    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(Status::Io, "IoError: cannot write \"" + tmp.string() + "\"");
        out << body;
        if (!out.flush())
            throw Error(Status::Io, "IoError: short write to \"" + tmp.string() + "\"");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error(Status::Io, "IoError: cannot rename plot into place: " + ec.message());
}

} // namespace tendex

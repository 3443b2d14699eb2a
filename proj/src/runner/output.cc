// Copyright 2026 The posthoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posthoc/runner/output.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace posthoc {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v == 0.0 ? 0.0 : v);  // no "-0"
    return buf;
}

void write_csv(const SweepResult &result, std::ostream &out) {
    out << "p,variant,estimate,ci_low,ci_high,reps,seed\n";
    for (const auto &r : result.rows) {
        out << format_real(r.p) << ',' << variant_name(r.variant) << ',' << format_real(r.estimate) << ','
            << format_real(r.ci_low) << ',' << format_real(r.ci_high) << ',' << r.reps << ',' << r.seed << '\n';
    }
}

std::string to_csv(const SweepResult &result) {
    std::ostringstream s;
    write_csv(result, s);
    return s.str();
}

void write_gnuplot(const SweepResult &result, std::ostream &out) {
    out << "# p encoded encoded_lo encoded_hi unencoded unencoded_lo unencoded_hi\n";
    for (size_t i = 0; i + 1 < result.rows.size(); i += 2) {
        const SweepRow &e = result.rows[i];
        const SweepRow &u = result.rows[i + 1];
        out << format_real(e.p) << ' ' << format_real(e.estimate) << ' ' << format_real(e.ci_low) << ' '
            << format_real(e.ci_high) << ' ' << format_real(u.estimate) << ' ' << format_real(u.ci_low) << ' '
            << format_real(u.ci_high) << '\n';
    }
}

namespace {

std::string escape_xml(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

}  // namespace

void write_svg(const SweepResult &result, const std::string &title, std::ostream &out) {
    constexpr double W = 640, H = 420, L = 70, R = 20, T = 40, B = 50;
    double x0 = result.grid.empty() ? 0 : result.grid.front();
    double x1 = result.grid.empty() ? 1 : result.grid.back();
    if (x1 <= x0) {
        x1 = x0 + 1;
    }
    double y0 = 1, y1 = 0;
    for (const auto &r : result.rows) {
        y0 = std::min(y0, r.ci_low);
        y1 = std::max(y1, r.ci_high);
    }
    if (y1 <= y0) {
        y0 -= 0.05;
        y1 += 0.05;
    }
    const double pad = 0.05 * (y1 - y0);
    y0 -= pad;
    y1 += pad;
    auto sx = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto sy = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
    char buf[256];

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
        << escape_xml(title) << "</text>\n";
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" stroke=\"black\"/>\n", L, T,
                  W - L - R, H - T - B);
    out << buf;
    for (int k = 0; k <= 4; k++) {
        const double xv = x0 + (x1 - x0) * k / 4;
        const double yv = y0 + (y1 - y0) * k / 4;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                      "font-size=\"11\">%.3g</text>\n",
                      sx(xv), H - B + 16, xv);
        out << buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"end\" font-family=\"sans-serif\" "
                      "font-size=\"11\">%.3g</text>\n",
                      L - 6, sy(yv) + 4, yv);
        out << buf;
    }
    out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">p</text>\n";
    out << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" transform=\"rotate(-90 16 " << (T + H - B) / 2
        << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">acceptance probability</text>\n";

    const struct {
        Variant v;
        const char *color;
    } series[] = {{Variant::encoded, "#1f5fbf"}, {Variant::unencoded, "#c03020"}};
    int legend = 0;
    for (const auto &s : series) {
        std::string points;
        for (const auto &r : result.rows) {
            if (r.variant != s.v) {
                continue;
            }
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(r.p), sy(r.estimate));
            points += buf;
            if (r.ci_high > r.ci_low) {
                std::snprintf(buf, sizeof buf,
                              "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"%s\"/>\n", sx(r.p),
                              sy(r.ci_low), sx(r.p), sy(r.ci_high), s.color);
                out << buf;
            }
            std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\"/>\n", sx(r.p),
                          sy(r.estimate), s.color);
            out << buf;
        }
        out << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << s.color << "\" points=\"" << points
            << "\"/>\n";
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"12\" fill=\"%s\">%s</text>\n",
                      W - R - 90, T + 18 + 16.0 * legend++, s.color, std::string(variant_name(s.v)).c_str());
        out << buf;
    }
    out << "</svg>\n";
}

}  // namespace posthoc

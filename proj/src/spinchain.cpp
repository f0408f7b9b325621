#include "entmono/spinchain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "entmono/parallel.hpp"

namespace entmono {

const char* measure_name(Measure m) { return m == Measure::E ? "E" : "C"; }

double g_factor(double lambda) {
    if (!(lambda > 0))
        throw InvalidParameterError("g_factor: lambda must be > 0, got " + std::to_string(lambda));
    const double two_over_pi = 2.0 / M_PI;
    return lambda < 1.0 ? two_over_pi : two_over_pi / lambda;
}

DensityMatrix neighbor_rho(double g) {
    if (!(g >= 0.0 && g < 1.0))
        throw InvalidParameterError("neighbor_rho: g must be in [0, 1), got " + std::to_string(g));
    double outer = (1.0 - g * g) / 4.0;
    double inner = (1.0 + g * g) / 4.0;
    ComplexMatrix rho = ComplexMatrix::Zero(4, 4);
    rho(0, 0) = outer;
    rho(1, 1) = inner;
    rho(2, 2) = inner;
    rho(3, 3) = outer;
    rho(1, 2) = g / 2.0;
    rho(2, 1) = g / 2.0;
    return DensityMatrix{rho};
}

double ground_state_e(double lambda, const TripartiteFrame& f) {
    return tripartite_e_from_rho(neighbor_rho(g_factor(lambda)), f);
}

double ground_state_concurrence(double lambda) {
    return concurrence(neighbor_rho(g_factor(lambda)));
}

std::vector<ScanRecord> scan(double lambda_min, double lambda_max, int steps,
                             const TripartiteFrame& f) {
    if (!(lambda_min > 0) || !(lambda_max > lambda_min))
        throw InvalidParameterError("scan: need 0 < lambda_min < lambda_max");
    if (steps < 3) throw InvalidParameterError("scan: need at least 3 steps");

    const double h = (lambda_max - lambda_min) / (steps - 1);
    std::vector<ScanRecord> records(steps);
    parallel_chunks(steps, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            double lambda = i + 1 == static_cast<std::uint64_t>(steps)
                                ? lambda_max
                                : lambda_min + static_cast<double>(i) * h;
            double g = g_factor(lambda);
            DensityMatrix rho = neighbor_rho(g);
            records[i] = {lambda, g, tripartite_e_from_rho(rho, f), concurrence(rho), 0, 0};
        }
    });

    for (int i = 0; i < steps; ++i) {
        int lo = std::max(0, i - 1), hi = std::min(steps - 1, i + 1);
        double dl = records[hi].lambda - records[lo].lambda;
        records[i].de_dlambda = (records[hi].e - records[lo].e) / dl;
        records[i].dc_dlambda = (records[hi].c - records[lo].c) / dl;
    }
    return records;
}

std::vector<KinkReport> detect_kinks(const std::vector<ScanRecord>& records, Measure measure) {
    const size_t n = records.size();
    if (n < 5) throw TooFewPointsError("detect_kinks: need at least 5 records, got " +
                                       std::to_string(n));
    const double h = records[1].lambda - records[0].lambda;
    if (!(h > 0)) throw InvalidParameterError("detect_kinks: grid is not increasing");
    for (size_t i = 1; i < n; ++i)
        if (std::abs(records[i].lambda - records[i - 1].lambda - h) > 1e-6 * h)
            throw InvalidParameterError("detect_kinks: grid is not uniform");

    auto value = [&](size_t i) {
        return measure == Measure::E ? records[i].e : records[i].c;
    };

    // |second difference|; a first-derivative jump J contributes ~ J*h split
    // across the one or two points bracketing it, while smooth stretches
    // contribute ~ y'' h^2, an order h smaller.
    std::vector<double> d2(n, 0.0);
    double ymax = 0;
    for (size_t i = 0; i < n; ++i) ymax = std::max(ymax, std::abs(value(i)));
    for (size_t i = 1; i + 1 < n; ++i)
        d2[i] = std::abs(value(i + 1) - 2.0 * value(i) + value(i - 1));

    // Median of the strictly positive second differences. Flat stretches
    // produce exact zeros (identical inputs give identical values), and a
    // mostly-flat series would otherwise drive the median itself to zero.
    std::vector<double> positive;
    for (size_t i = 1; i + 1 < n; ++i)
        if (d2[i] > 0) positive.push_back(d2[i]);
    if (positive.empty()) return {};
    std::sort(positive.begin(), positive.end());
    size_t mid = positive.size() / 2;
    double median = positive.size() % 2 ? positive[mid]
                                        : 0.5 * (positive[mid - 1] + positive[mid]);
    double floor = 1000.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, ymax);
    double threshold = std::max(10.0 * median, floor);

    std::vector<KinkReport> kinks;
    size_t i = 1;
    while (i + 1 < n) {
        if (d2[i] <= threshold) {
            ++i;
            continue;
        }
        // A maximal run of flagged points is one kink.
        size_t best = i;
        size_t j = i;
        while (j + 1 < n && d2[j] > threshold) {
            if (d2[j] > d2[best]) best = j;
            ++j;
        }
        // The spike is J*h at a grid-aligned kink and splits between two
        // neighbors otherwise; adding the larger neighbor covers both.
        double neighbor = 0;
        if (best > 1) neighbor = std::max(neighbor, d2[best - 1]);
        if (best + 2 < n) neighbor = std::max(neighbor, d2[best + 1]);
        kinks.push_back({measure, records[best].lambda, (d2[best] + neighbor) / h});
        i = j;
    }
    return kinks;
}

namespace {

std::string csv_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ScanRecord>& records) {
    os << "lambda,G,E,C,dE_dlambda,dC_dlambda\n";
    for (const ScanRecord& r : records) {
        os << csv_number(r.lambda) << ',' << csv_number(r.g) << ',' << csv_number(r.e) << ','
           << csv_number(r.c) << ',' << csv_number(r.de_dlambda) << ','
           << csv_number(r.dc_dlambda) << '\n';
    }
}

// ===================== svg =====================

namespace {

struct Axes {
    double xmin, xmax, ymin, ymax;
    static constexpr double kLeft = 62, kRight = 746, kTop = 22, kBottom = 420;

    double px(double x) const { return kLeft + (x - xmin) / (xmax - xmin) * (kRight - kLeft); }
    double py(double y) const { return kBottom - (y - ymin) / (ymax - ymin) * (kBottom - kTop); }
};

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

void append_polyline(std::ostringstream& out, const Axes& ax,
                     const std::vector<ScanRecord>& records, Measure m, const char* style) {
    out << "  <polyline fill=\"none\" " << style << " points=\"";
    for (size_t i = 0; i < records.size(); ++i) {
        double y = m == Measure::E ? records[i].e : records[i].c;
        if (i) out << ' ';
        out << coord(ax.px(records[i].lambda)) << ',' << coord(ax.py(y));
    }
    out << "\"/>\n";
}

}  // namespace

std::string render_svg(const std::vector<ScanRecord>& records,
                       const std::vector<KinkReport>& kinks) {
    if (records.empty()) throw TooFewPointsError("render_svg: no records");

    Axes ax{records.front().lambda, records.back().lambda, 0.0, 0.0};
    for (const ScanRecord& r : records) ax.ymax = std::max({ax.ymax, r.e, r.c});
    ax.ymax = std::ceil(ax.ymax * 2.0) / 2.0;  // round up to a half-unit
    if (ax.ymax <= 0) ax.ymax = 1.0;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"780\" height=\"470\" "
           "viewBox=\"0 0 780 470\">\n"
        << "  <rect width=\"780\" height=\"470\" fill=\"white\"/>\n";

    // grid and ticks
    const int nticks = 5;
    out << "  <g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (int t = 0; t <= nticks; ++t) {
        double x = ax.xmin + (ax.xmax - ax.xmin) * t / nticks;
        double y = ax.ymin + (ax.ymax - ax.ymin) * t / nticks;
        out << "    <line x1=\"" << coord(ax.px(x)) << "\" y1=\"" << coord(Axes::kTop)
            << "\" x2=\"" << coord(ax.px(x)) << "\" y2=\"" << coord(Axes::kBottom) << "\"/>\n";
        out << "    <line x1=\"" << coord(Axes::kLeft) << "\" y1=\"" << coord(ax.py(y))
            << "\" x2=\"" << coord(Axes::kRight) << "\" y2=\"" << coord(ax.py(y)) << "\"/>\n";
    }
    out << "  </g>\n";
    out << "  <g font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">\n";
    for (int t = 0; t <= nticks; ++t) {
        double x = ax.xmin + (ax.xmax - ax.xmin) * t / nticks;
        double y = ax.ymin + (ax.ymax - ax.ymin) * t / nticks;
        char label[32];
        std::snprintf(label, sizeof label, "%.3g", x);
        out << "    <text x=\"" << coord(ax.px(x)) << "\" y=\"" << coord(Axes::kBottom + 20)
            << "\" text-anchor=\"middle\">" << label << "</text>\n";
        std::snprintf(label, sizeof label, "%.3g", y);
        out << "    <text x=\"" << coord(Axes::kLeft - 8) << "\" y=\"" << coord(ax.py(y) + 4)
            << "\" text-anchor=\"end\">" << label << "</text>\n";
    }
    out << "    <text x=\"" << coord((Axes::kLeft + Axes::kRight) / 2) << "\" y=\"458\" "
           "text-anchor=\"middle\">lambda</text>\n";
    out << "  </g>\n";

    // kink markers behind the curves
    for (const KinkReport& k : kinks) {
        out << "  <line stroke=\"#888888\" stroke-dasharray=\"2,3\" x1=\""
            << coord(ax.px(k.location)) << "\" y1=\"" << coord(Axes::kTop) << "\" x2=\""
            << coord(ax.px(k.location)) << "\" y2=\"" << coord(Axes::kBottom) << "\"/>\n";
    }

    append_polyline(out, ax, records, Measure::E,
                    "stroke=\"#1f5fa8\" stroke-width=\"2\"");
    append_polyline(out, ax, records, Measure::C,
                    "stroke=\"#c23b22\" stroke-width=\"2\" stroke-dasharray=\"7,4\"");

    // kink dots on the owning curve
    for (const KinkReport& k : kinks) {
        auto at = std::min_element(records.begin(), records.end(),
                                   [&](const ScanRecord& a, const ScanRecord& b) {
                                       return std::abs(a.lambda - k.location) <
                                              std::abs(b.lambda - k.location);
                                   });
        double y = k.measure == Measure::E ? at->e : at->c;
        out << "  <circle cx=\"" << coord(ax.px(k.location)) << "\" cy=\"" << coord(ax.py(y))
            << "\" r=\"4\" fill=\"#222222\"/>\n";
    }

    // legend
    out << "  <g font-family=\"sans-serif\" font-size=\"14\">\n"
        << "    <line x1=\"620\" y1=\"40\" x2=\"660\" y2=\"40\" stroke=\"#1f5fa8\" "
           "stroke-width=\"2\"/>\n"
        << "    <text x=\"668\" y=\"45\">E</text>\n"
        << "    <line x1=\"620\" y1=\"62\" x2=\"660\" y2=\"62\" stroke=\"#c23b22\" "
           "stroke-width=\"2\" stroke-dasharray=\"7,4\"/>\n"
        << "    <text x=\"668\" y=\"67\">C</text>\n"
        << "  </g>\n</svg>\n";
    return out.str();
}

}  // namespace entmono

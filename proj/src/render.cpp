#include "fermat/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "fermat/linalg.hpp"

namespace fermat {

namespace {

bool all_real(std::span<const Cyclo> v) {
    return std::all_of(v.begin(), v.end(), [](const Cyclo& c) { return c.is_rational(); });
}

double to_double(const Cyclo& c) { return c.rational_part().get_d(); }

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    return s == "-0.00" ? "0.00" : s;
}

// Chart: screen (u, v) corresponds to the projective point M (u, v, 1).
struct Chart {
    std::array<std::array<double, 3>, 3> M{};
    std::array<std::array<double, 3>, 3> Minv{};

    explicit Chart(const std::optional<std::vector<Cyclo>>& infinity) {
        std::array<double, 3> l{0, 0, 1};
        if (infinity) {
            if (infinity->size() != 3 || !all_real(*infinity)) throw std::invalid_argument("line at infinity must be a real form in x0, x1, x2");
            for (int i = 0; i < 3; ++i) l[i] = to_double((*infinity)[i]);
        }
        // Minv rows: two unit covectors completing l to a basis, then l.
        int drop = 2;
        while (drop >= 0 && l[drop] == 0) --drop;
        if (drop < 0) throw std::invalid_argument("line at infinity is the zero form");
        int r = 0;
        for (int i = 0; i < 3; ++i) {
            if (i == drop) continue;
            Minv[r] = {0, 0, 0};
            Minv[r][i] = 1;
            ++r;
        }
        Minv[2] = l;
        invert();
    }

    void invert() {
        const auto& a = Minv;
        const double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
                M[i][j] = (a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1]) / det;
            }
    }

    std::array<double, 3> lift(double u, double v) const {
        return {M[0][0] * u + M[0][1] * v + M[0][2], M[1][0] * u + M[1][1] * v + M[1][2],
                M[2][0] * u + M[2][1] * v + M[2][2]};
    }

    std::optional<std::pair<double, double>> project(const std::array<double, 3>& p) const {
        std::array<double, 3> q{};
        for (int i = 0; i < 3; ++i) q[i] = Minv[i][0] * p[0] + Minv[i][1] * p[1] + Minv[i][2] * p[2];
        if (std::abs(q[2]) < 1e-12) return std::nullopt;
        return std::make_pair(q[0] / q[2], q[1] / q[2]);
    }

    // Line {l . X = 0} in screen coordinates: alpha u + beta v + gamma = 0.
    std::array<double, 3> pull_back(const std::array<double, 3>& l) const {
        std::array<double, 3> out{};
        for (int j = 0; j < 3; ++j) out[j] = l[0] * M[0][j] + l[1] * M[1][j] + l[2] * M[2][j];
        return out;
    }
};

// Clip alpha u + beta v + gamma = 0 to the viewport rectangle.
std::optional<Segment> clip_line(const std::array<double, 3>& c, const Viewport& vp) {
    std::vector<std::pair<double, double>> hits;
    auto add = [&](double u, double v) {
        const double eps = 1e-9 * (1 + std::abs(u) + std::abs(v));
        if (u < vp.xmin - eps || u > vp.xmax + eps || v < vp.ymin - eps || v > vp.ymax + eps) return;
        for (const auto& h : hits)
            if (std::abs(h.first - u) < 1e-9 && std::abs(h.second - v) < 1e-9) return;
        hits.emplace_back(u, v);
    };
    if (c[1] != 0) {
        add(vp.xmin, -(c[0] * vp.xmin + c[2]) / c[1]);
        add(vp.xmax, -(c[0] * vp.xmax + c[2]) / c[1]);
    }
    if (c[0] != 0) {
        add(-(c[1] * vp.ymin + c[2]) / c[0], vp.ymin);
        add(-(c[1] * vp.ymax + c[2]) / c[0], vp.ymax);
    }
    if (hits.size() < 2) return std::nullopt;
    return Segment{hits[0].first, hits[0].second, hits[1].first, hits[1].second};
}

std::array<double, 3> real_coords(const ProjPoint& p) {
    if (p.size() != 3 || !all_real(p.coords())) throw std::invalid_argument("only real points of P^2 can be drawn");
    return {to_double(p.coords()[0]), to_double(p.coords()[1]), to_double(p.coords()[2])};
}

}  // namespace

Viewport parse_viewport(const std::string& text) {
    Viewport v;
    char extra;
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &v.xmin, &v.xmax, &v.ymin, &v.ymax, &extra) != 4)
        throw std::invalid_argument("viewport must be 'xmin,xmax,ymin,ymax'");
    if (!(v.xmin < v.xmax && v.ymin < v.ymax)) throw std::invalid_argument("viewport must have xmin < xmax and ymin < ymax");
    return v;
}

std::vector<Segment> contour_segments(const std::vector<double>& grid, int res, const Viewport& view) {
    std::vector<Segment> segs;
    const double dx = (view.xmax - view.xmin) / res, dy = (view.ymax - view.ymin) / res;
    auto at = [&](int i, int j) { return grid[static_cast<std::size_t>(j) * (res + 1) + i]; };
    auto interp = [](double a, double b) { return a == b ? 0.5 : a / (a - b); };
    for (int j = 0; j < res; ++j) {
        for (int i = 0; i < res; ++i) {
            // corners counterclockwise from bottom-left
            const double f[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
            const double x = view.xmin + i * dx, y = view.ymin + j * dy;
            int mask = 0;
            for (int k = 0; k < 4; ++k)
                if (f[k] >= 0) mask |= 1 << k;
            if (mask == 0 || mask == 15) continue;
            // edge k joins corner k and k+1
            std::array<std::pair<double, double>, 4> p;
            const double cx[4] = {x, x + dx, x + dx, x}, cy[4] = {y, y, y + dy, y + dy};
            for (int k = 0; k < 4; ++k) {
                const int k1 = (k + 1) % 4;
                const double t = interp(f[k], f[k1]);
                p[k] = {cx[k] + t * (cx[k1] - cx[k]), cy[k] + t * (cy[k1] - cy[k])};
            }
            std::vector<int> crossed;
            for (int k = 0; k < 4; ++k)
                if (((mask >> k) & 1) != ((mask >> ((k + 1) % 4)) & 1)) crossed.push_back(k);
            auto emit = [&](int a, int b) { segs.push_back({p[a].first, p[a].second, p[b].first, p[b].second}); };
            if (crossed.size() == 2) {
                emit(crossed[0], crossed[1]);
            } else {
                // saddle: decide the pairing by the sign at the cell centre
                const bool centre = (f[0] + f[1] + f[2] + f[3]) >= 0;
                const bool c0 = (mask & 1) != 0;
                if (centre == c0) {
                    emit(0, 1);
                    emit(2, 3);
                } else {
                    emit(3, 0);
                    emit(1, 2);
                }
            }
        }
    }
    return segs;
}

std::string render_svg(const RenderInput& in, const RenderOptions& opt) {
    if (opt.resolution < 2) throw std::invalid_argument("resolution must be >= 2");
    const Viewport& vp = opt.view;
    if (in.arrangement) {
        if (in.arrangement->N != 2) throw std::invalid_argument("only line arrangements in P^2 can be drawn");
        if (!in.arrangement->is_real())
            throw std::invalid_argument("arrangement " + in.arrangement->spec_string() +
                                        " has non-real lines (root order " + std::to_string(in.arrangement->n) +
                                        "); only root orders n <= 2 can be drawn");
    }
    if (in.curve) {
        if (in.curve->nvars() != 3) throw std::invalid_argument("only plane curves can be drawn");
        for (const auto& [e, c] : in.curve->terms())
            if (!c.is_rational()) throw std::invalid_argument("curve has non-real coefficients");
    }
    const Chart chart(opt.infinity);
    const double W = opt.width;
    const double H = std::round(W * (vp.ymax - vp.ymin) / (vp.xmax - vp.xmin));
    auto sx = [&](double u) { return fmt((u - vp.xmin) / (vp.xmax - vp.xmin) * W); };
    auto sy = [&](double v) { return fmt((vp.ymax - v) / (vp.ymax - vp.ymin) * H); };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
        << " " << H << "\">\n";
    if (!in.title.empty()) out << "<title>" << in.title << "</title>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (in.arrangement) {
        out << "<g id=\"arrangement\" stroke=\"#888888\" stroke-width=\"1.5\">\n";
        for (const auto& h : in.arrangement->hyperplanes) {
            std::array<double, 3> l{};
            for (int i = 0; i < 3; ++i) l[i] = to_double(h.form()[i]);
            const auto seg = clip_line(chart.pull_back(l), vp);
            if (!seg) continue;
            out << "<line x1=\"" << sx(seg->x0) << "\" y1=\"" << sy(seg->y0) << "\" x2=\"" << sx(seg->x1) << "\" y2=\""
                << sy(seg->y1) << "\"/>\n";
        }
        out << "</g>\n";
    }

    if (in.curve) {
        const int res = opt.resolution;
        std::vector<double> grid(static_cast<std::size_t>(res + 1) * (res + 1));
        std::vector<std::pair<std::vector<int>, double>> terms;
        for (const auto& [e, c] : in.curve->terms()) terms.emplace_back(e, to_double(c));
        for (int j = 0; j <= res; ++j) {
            for (int i = 0; i <= res; ++i) {
                const double u = vp.xmin + (vp.xmax - vp.xmin) * i / res;
                const double v = vp.ymin + (vp.ymax - vp.ymin) * j / res;
                const auto X = chart.lift(u, v);
                double s = 0;
                for (const auto& [e, c] : terms) s += c * std::pow(X[0], e[0]) * std::pow(X[1], e[1]) * std::pow(X[2], e[2]);
                grid[static_cast<std::size_t>(j) * (res + 1) + i] = s;
            }
        }
        out << "<path id=\"curve\" fill=\"none\" stroke=\"#1f4e9e\" stroke-width=\"2\" d=\"";
        bool first = true;
        for (const auto& s : contour_segments(grid, res, vp)) {
            out << (first ? "" : " ") << "M" << sx(s.x0) << " " << sy(s.y0) << "L" << sx(s.x1) << " " << sy(s.y1);
            first = false;
        }
        out << "\"/>\n";
    }

    auto dot_at = [&](const ProjPoint& p, const char* colour, double r) {
        const auto uv = chart.project(real_coords(p));
        if (!uv) return;
        out << "<circle cx=\"" << sx(uv->first) << "\" cy=\"" << sy(uv->second) << "\" r=\"" << r << "\" fill=\""
            << colour << "\"/>\n";
    };
    if (!in.points.empty()) {
        out << "<g id=\"points\">\n";
        for (const auto& p : in.points) dot_at(p, "black", 4);
        out << "</g>\n";
    }
    if (in.marked) {
        out << "<g id=\"general-point\">\n";
        dot_at(*in.marked, "#c0392b", 5);
        out << "</g>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace fermat

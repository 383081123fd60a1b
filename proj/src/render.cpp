#include "rhombic/render.hpp"

#include <algorithm>
#include <sstream>

namespace rhombic {

namespace {

constexpr int unit = 40;
constexpr int margin = 20;

struct Frame {
    int minx = 0;
    int miny = 0;
    int maxx = 0;
    int maxy = 0;

    // Lattice coordinates scaled by 2 so edge midpoints stay integral.
    int X2(int x2) const { return 2 * margin + (x2 - 2 * minx) * unit; }
    int Y2(int y2) const { return 2 * margin + (2 * maxy - y2) * unit; }
    int width() const { return 2 * margin + (maxx - minx) * unit; }
    int height() const { return 2 * margin + (maxy - miny) * unit; }
};

Frame frame_of(const RhombicDiagram& d) {
    Frame f;
    Point p;
    for (Step s : d.nw_path) {
        p = p + offset(s);
        f.minx = std::min(f.minx, p.x);
        f.miny = std::min(f.miny, p.y);
    }
    return f;
}

// Half-pixel values only arise from doubled coordinates; print them without trailing zeros.
std::string px(int doubled) {
    std::string s = std::to_string(doubled / 2);
    if (doubled % 2 != 0)
        s += ".5";
    return s;
}

const char* glyph(Fill f) {
    switch (f) {
    case Fill::Alpha: return "\xCE\xB1";
    case Fill::Beta: return "\xCE\xB2";
    case Fill::Q: return "q";
    case Fill::Empty: break;
    }
    return nullptr;
}

const char* strip_style(Site s) {
    switch (s) {
    case Site::Heavy: return "stroke=\"red\" stroke-dasharray=\"6,4\"";
    case Site::Hole: return "stroke=\"blue\" stroke-dasharray=\"2,3\"";
    case Site::Light: break;
    }
    return "stroke=\"green\"";
}

Point doubled_mid(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }

void open_svg(std::ostringstream& out, int w, int h) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
}

void tableau_body(std::ostringstream& out, const Tableau& t, const Frame& f) {
    const Tiling& tiling = *t.tiling;
    const auto tiles = tiling.tiles();
    out << "<g class=\"tiles\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
    for (const Tile& tile : tiles) {
        out << "<polygon class=\"" << kind_name(tile.kind) << "\" points=\"";
        const auto v = tile.vertices();
        for (std::size_t i = 0; i < v.size(); ++i)
            out << (i ? " " : "") << px(f.X2(2 * v[i].x)) << ',' << px(f.Y2(2 * v[i].y));
        out << "\"/>\n";
    }
    out << "</g>\n";

    // Each tile carries one segment of the strip through its east/west edges and one of the strip
    // through its south/north edges.
    std::vector<const Crossing*> by_tile(tiles.size());
    for (const Crossing& c : tiling.sweep())
        by_tile[c.tile] = &c;
    out << "<g class=\"strips\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const auto v = tiles[i].vertices();
        const Crossing& c = *by_tile[i];
        const Point east = doubled_mid(v[0], v[1]), west = doubled_mid(v[3], v[2]);
        const Point north = doubled_mid(v[0], v[3]), south = doubled_mid(v[1], v[2]);
        auto line = [&](Point a, Point b, std::size_t strip) {
            out << "<line x1=\"" << px(f.X2(a.x)) << "\" y1=\"" << px(f.Y2(a.y)) << "\" x2=\"" << px(f.X2(b.x))
                << "\" y2=\"" << px(f.Y2(b.y)) << "\" " << strip_style(tiling.word()[strip]) << "/>\n";
        };
        line(east, west, c.east_strip);
        line(south, north, c.south_strip);
    }
    out << "</g>\n";

    out << "<g class=\"symbols\" font-family=\"serif\" font-size=\"18\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">\n";
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        const char* g = glyph(t.filling[i]);
        if (!g)
            continue;
        const auto v = tiles[i].vertices();
        // Centroid times 4, halved once for the doubled frame.
        const int cx = v[0].x + v[1].x + v[2].x + v[3].x;
        const int cy = v[0].y + v[1].y + v[2].y + v[3].y;
        const int X4 = 2 * f.X2(0) + cx * unit, Y4 = 2 * f.Y2(0) - cy * unit;
        out << "<text x=\"" << px(X4 / 2) << "\" y=\"" << px(Y4 / 2) << "\">" << g << "</text>\n";
    }
    out << "</g>\n";
}

std::string label_text(const EdgeLabel& l) {
    if (l.lo() == l.hi())
        return std::to_string(l.lo());
    return std::to_string(l.lo()) + ".." + std::to_string(l.hi());
}

std::vector<std::string> ascii_grid(const Tableau& t) {
    const Tiling& tiling = *t.tiling;
    const Frame f = frame_of(tiling.diagram());
    const int w = -2 * f.minx + 1, h = -2 * f.miny + 1;
    std::vector<std::string> rows(static_cast<std::size_t>(h), std::string(static_cast<std::size_t>(w), ' '));
    for (std::size_t i = 0; i < tiling.size(); ++i) {
        const Tile& tile = tiling.tiles()[i];
        const Point c = Point{2 * tile.anchor.x, 2 * tile.anchor.y} + offset(tile.east_step()) +
                        offset(tile.south_step());
        rows[static_cast<std::size_t>(-c.y)][static_cast<std::size_t>(c.x - 2 * f.minx)] = fill_char(t.filling[i]);
    }
    for (auto& r : rows)
        r.erase(r.find_last_not_of(' ') + 1);
    while (!rows.empty() && rows.back().empty())
        rows.pop_back();
    while (!rows.empty() && rows.front().empty())
        rows.erase(rows.begin());
    std::size_t indent = std::string::npos;
    for (const auto& r : rows)
        if (!r.empty())
            indent = std::min(indent, r.find_first_not_of(' '));
    for (auto& r : rows)
        r.erase(0, std::min(indent, r.size()));
    return rows;
}

} // namespace

std::string render_tableau_svg(const Tableau& t) {
    const Frame f = frame_of(t.tiling->diagram());
    std::ostringstream out;
    open_svg(out, f.width(), f.height());
    out << "<title>" << t.tiling->word().to_string() << "</title>\n";
    tableau_body(out, t, f);
    out << "</svg>\n";
    return out.str();
}

std::string render_trace_svg(const LabeledTableau& lt) {
    const Frame f = frame_of(lt.tableau.tiling->diagram());
    std::ostringstream out;
    open_svg(out, f.width(), f.height());
    out << "<title>" << lt.tableau.tiling->word().to_string() << " final block-end " << lt.final_block_end
        << "</title>\n";
    tableau_body(out, lt.tableau, f);
    out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" fill=\"purple\" "
           "text-anchor=\"middle\">\n";
    for (const auto& [edge, label] : lt.labels) {
        if (label.empty())
            continue;
        const Point m = doubled_mid(edge.from, edge.to());
        out << "<text x=\"" << px(f.X2(m.x)) << "\" y=\"" << px(f.Y2(m.y)) << "\">" << label_text(label)
            << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_assemblee_svg(const Assemblee& a) {
    constexpr int cell = 20;
    constexpr int gap = 10;
    int width = margin;
    std::vector<int> starts;
    for (const auto& block : a.blocks()) {
        starts.push_back(width);
        width += static_cast<int>(block.size()) * cell + gap;
    }
    width += margin - (a.blocks().empty() ? 0 : gap);
    const int height = 2 * margin + unit;
    std::ostringstream out;
    open_svg(out, width, height);
    out << "<g class=\"blocks\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
           "dominant-baseline=\"central\">\n";
    for (std::size_t i = 0; i < a.blocks().size(); ++i) {
        const auto& block = a.blocks()[i];
        const int w = static_cast<int>(block.size()) * cell;
        std::string text;
        for (std::size_t k = 0; k < block.size(); ++k)
            text += (k ? " " : "") + std::to_string(block[k]);
        out << "<rect x=\"" << starts[i] << "\" y=\"" << margin << "\" width=\"" << w << "\" height=\"" << unit
            << "\" fill=\"none\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(2 * starts[i] + w) << "\" y=\"" << margin + unit / 2 << "\">" << text
            << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_tableau_ascii(const Tableau& t) {
    std::string out;
    for (const auto& row : ascii_grid(t))
        out += row + '\n';
    return out;
}

std::string render_trace_ascii(const LabeledTableau& lt) {
    std::string out = render_tableau_ascii(lt.tableau);
    const TerminationReport rep = termination_report(lt);
    auto group = [](const std::vector<EdgeLabel>& labels) {
        std::string s;
        for (const auto& l : labels)
            s += to_string(l);
        return s;
    };
    out += "horizontal: " + group(rep.horizontal) + '\n';
    out += "diagonal: " + group(rep.diagonal) + '\n';
    out += "vertical: " + group(rep.vertical) + '\n';
    out += "final block-end: " + std::to_string(lt.final_block_end) + '\n';
    return out;
}

std::string render_assemblee_ascii(const Assemblee& a) {
    std::string out;
    for (const auto& block : a.blocks()) {
        out += '[';
        for (std::size_t k = 0; k < block.size(); ++k)
            out += (k ? " " : "") + std::to_string(block[k]);
        out += ']';
    }
    return out + '\n';
}

} // namespace rhombic

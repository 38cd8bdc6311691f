#pragma once

#include "stratumforge/grid_surface.hpp"

#include <vector>

namespace stratumforge {

// Slits cut into the standard torus of length d (height 1), with the gluing
// that re-attaches the cut sides by translations. Horizontal lines sit at
// heights level/levels; vertical slits join consecutive lines.
struct SlitTorusDiagram {
    struct HSlit {
        int level = 0;
        Rat x0, x1; // 0 <= x0 < x1 <= d, endpoints in (1/2)Z
    };
    struct VSlit {
        int level = 0; // joins heights level/levels and (level+1)/levels
        Rat x;
    };

    int d = 1;
    int levels = 1;
    std::vector<HSlit> hslits;
    std::vector<VSlit> vslits;
    std::vector<int> hpair; // bottom of hslit i glued to top of hslit hpair[i]
    std::vector<int> vpair; // left of vslit i glued to right of vslit vpair[i]
};

struct CompiledDiagram {
    GridSurface surface;
    int cols = 0, rows = 0;
    Rat sx = 1, sy = 1;

    int cell_at(int col, int row) const { return row * cols + col; }
    int col_of(int cell) const { return cell % cols; }
    int row_of(int cell) const { return cell / cols; }
};

CompiledDiagram compile_diagram(const SlitTorusDiagram& dg);

// Grid x-positions (multiples of sx) at which the vertex touches the given line.
std::vector<Rat> vertex_columns_on_level(const CompiledDiagram& cd, int vertex, int level);

} // namespace stratumforge

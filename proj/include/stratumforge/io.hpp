#pragma once

#include "stratumforge/checker.hpp"
#include "stratumforge/diagram.hpp"
#include "stratumforge/grid_surface.hpp"
#include "stratumforge/oracle.hpp"

#include <string>

namespace stratumforge {

// Text format, round-trip exact:
//   n=<int> sx=<p/q> sy=<p/q>
//   r=<one-line image list>
//   u=<one-line image list>
//   marks=<vertex:order,...>   (present iff the surface has zeros)
std::string write_origami_text(const GridSurface& s);
GridSurface read_origami_text(const std::string& text);

std::string write_origami_json(const GridSurface& s);
GridSurface read_origami_json(const std::string& text);

// Slit diagram text:
//   d=<int> levels=<int>
//   line <level>: slit <x0>-<x1> ...
//   vslit <x> <level1>-<level2>
//   glue h<i>.b h<j>.t / glue v<i>.l v<j>.r
std::string write_diagram_text(const SlitTorusDiagram& dg);
SlitTorusDiagram read_diagram_text(const std::string& text);

std::string write_cocycle_json(const ExactCocycle& chi);
ExactCocycle read_cocycle_json(const std::string& text);

std::string verdict_json(const RealizabilityVerdict& v, const BasisContext& ctx);

std::string census_csv(const std::vector<CensusRow>& rows, int N);

std::string certificate_json(const Certificate& c);

std::string write_monodromy_json(const MonodromyDatum& m);
MonodromyDatum read_monodromy_json(const std::string& text);

// File helpers.
std::string slurp(const std::string& path);
void spew(const std::string& path, const std::string& content);

} // namespace stratumforge

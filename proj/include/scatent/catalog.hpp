#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "scatent/dense_lu.hpp"
#include "scatent/graph.hpp"

namespace scatent {

// ---- closed forms ----------------------------------------------------------

// Average entropy of one Neumann vertex with d >= 3 leads.
double closed_form_single_vertex_entropy(int d);

// Transmission amplitude of the star S_n with leads at the center and at one
// peripheral vertex, n >= 3. Throws SingularPoint where the secular
// determinant vanishes.
cplx closed_form_star_amplitude(int n, double k);
cplx closed_form_star_secular(int n, double k);

// Transmission amplitude 1 -> 2 of the cycle C_n with leads on vertices 1, 2,
// n >= 2. This is the sign-corrected form: the commonly quoted expression
// with a leading +4z differs from the physical amplitude by a factor -1.
cplx closed_form_cycle_amplitude(int n, double k);
cplx closed_form_cycle_amplitude_as_quoted(int n, double k);

// ---- catalog graphs --------------------------------------------------------

std::filesystem::path default_catalog_dir();

// Two vertices joined by edges of lengths 1 and n - 1, one lead on each.
MetricGraph two_vertex_ring(int n);

// i copies of the four-vertex star element chained along a spine.
MetricGraph fishbone(int copies, BoundaryCondition dead_end_bc);

// Ring of 2m + 2 unit edges with leads on two opposite vertices (1 and m + 2)
// and chord units placed along the ring: 'I' is one rung, 'Q' two parallel
// rungs, 'X' two crossed chords.
MetricGraph chord_ring(std::string_view units, std::string name);

struct CatalogEntry {
  std::string id;
  int vertices = 0;
  int edges = 0;
  int leads = 0;
  int uniform_degree = 0;  // 0: degrees not constrained
};

const std::vector<CatalogEntry>& catalog_entries();

// ids: Q X IQ IX QQ XQ IXI XX, fig1a-n2 .. fig1a-n9, fishbone-<i>,
// fishbone-<i>-dirichlet. Data-backed ids are read from `dir` and checked
// against their structural counts.
MetricGraph load_catalog_graph(std::string_view id,
                               const std::filesystem::path& dir = default_catalog_dir());

}  // namespace scatent

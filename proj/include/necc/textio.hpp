#pragma once

#include <string>

#include "necc/nec.hpp"
#include "necc/sim.hpp"

namespace necc {

// "3" -> F_3, "2^4" -> F_16. Throws ParseError.
Field parse_field_token(const std::string& token);

// Polynomial grammar: terms joined by '+'; term = c | z | cz | z^k | cz^k
// with c a decimal field element; whitespace ignored. Duplicate powers add.
Poly parse_poly(const std::string& text, const Field& field);

// Generator matrix text: one row per non-comment line, comma-separated
// polynomials, optional surrounding brackets. '#' starts a comment.
PolyMatrix parse_generator(const std::string& text, const Field& field);
PolyMatrix load_generator_file(const std::string& path, const Field& field);

// Network description file. Lines (any order, '#' comments):
//   field <p> <m>
//   inputs <n>
//   source <vertex>
//   sinks <v1> <v2> ...
//   edge <index> <tail> <head>     indices must be exactly 1..E, ancestral
//   alpha <input> <edge> <value>
//   beta <edge_i> <edge_j> <value>
//   eps <sink> <edge> <component> <value>
// Omitted kernel sections take the defaults documented on NetworkSpec.
NetworkSpec parse_network(const std::string& text);
NetworkSpec load_network_file(const std::string& path);
std::string write_network(const NetworkSpec& spec);

// Error pattern file: one pattern per line, space-separated edge indices.
ErrorPatternSet parse_patterns(const std::string& text, int num_edges);

// Phi spec: "single-edges", "upto-2-edges", or a pattern file path.
ErrorPatternSet resolve_phi(const std::string& phi_spec, int num_edges);

// ---- Rendering ----

std::string render_matrix(const ScalarMatrix& m, const std::string& indent = "  ");
std::string render_transfer(const TransferSet& ts);
std::string render_code_metrics(const PolyMatrix& g, const CodeMetrics& m);

// Paper-style sink table, byte-stable: two-space separated padded columns
// Sink / Output convolutional code / dfree,Tdfree / Decoding on.
std::string render_sink_table(const ConstructionReport& report);
std::string render_construction(const ConstructionReport& report);

std::string render_trial(const TrialReport& report);
std::string render_summary(const ExhaustiveSummary& summary);

// Machine-readable (JSON) records.
std::string json_transfer(const TransferSet& ts);
std::string json_code_metrics(const PolyMatrix& g, const CodeMetrics& m);
std::string json_construction(const ConstructionReport& report);
std::string json_trial(const TrialReport& report);
std::string json_summary(const ExhaustiveSummary& summary);

}  // namespace necc

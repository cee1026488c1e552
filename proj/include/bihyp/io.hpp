#ifndef BIHYP_IO_HPP
#define BIHYP_IO_HPP

#include <optional>
#include <string>

#include "bihyp/constructions.hpp"
#include "bihyp/hypergraph.hpp"

namespace bihyp {

struct ParsedInstance {
    MixedHypergraph h;
    std::optional<Provenance> provenance;
};

// JSON object {"n": int, "c_edges": [[...]], "d_edges": [[...]]}; instances
// with C = D use the shorthand {"n": int, "edges": [[...]]}. Generated files
// carry an extra "provenance" object. Output is canonical: sorted keys,
// two-space indent, trailing newline, so parse/serialize round trips are
// byte-identical.
std::string to_json(const MixedHypergraph& h,
                    const std::optional<Provenance>& prov = std::nullopt);
ParsedInstance from_json(const std::string& text);

// Plain text: optional "#bi" first line (single family listed once), then
// "n r" with r the common edge size or 0, then one edge per line. Mixed
// instances prefix lines with "c " or "d ".
std::string to_edge_list(const MixedHypergraph& h);
ParsedInstance from_edge_list(const std::string& text);

// Dispatches on extension: .json for JSON, anything else as edge list.
ParsedInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const MixedHypergraph& h,
                         const std::optional<Provenance>& prov = std::nullopt);

std::string verdict_to_json(const struct Verdict& v);

}  // namespace bihyp

#endif

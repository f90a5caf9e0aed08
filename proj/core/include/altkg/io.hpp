#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "altkg/alternation.hpp"
#include "altkg/graph.hpp"
#include "altkg/hypergraph.hpp"

namespace altkg {

// File helpers.  Errors surface as InputError naming the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

// Hypergraph JSON: {"vertices":[ids],"edges":[[ids],...]}.
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

// Linear order JSON: a bare array of vertex ids.
std::string order_to_json(const LinearOrder& o);
LinearOrder order_from_json(const std::string& text);

// Graph JSON: {"vertices":n,"edges":[[u,v],...]} with optional "labels".
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Graph text format: header line "p <n>", then one "u v" line per edge
// (0-based endpoints).  Blank lines and "#" comment lines are skipped.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

// Certificate JSON: every certificate field plus the tool version, so a
// stored certificate can be rechecked by any later build.
std::string certificate_to_json(const AltCertificate& c);
AltCertificate certificate_from_json(const std::string& text);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view data);

/// Content address of a certificate's instance: hash of the canonical
/// (hypergraph, order, kind) serialization, as 16 hex digits.  Identical
/// instances collide on purpose so reruns overwrite rather than accumulate.
std::string instance_key(const Hypergraph& h, const LinearOrder& o, AltKind kind);

/// Write the certificate into dir (created if needed) under its content
/// address.  Returns the file path.
std::string store_certificate(const std::string& dir, const AltCertificate& c);

} // namespace altkg

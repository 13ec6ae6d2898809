#pragma once

#include "maninforge/reverse.hpp"
#include "maninforge/rmatrix.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mforge {

/// Document-level failure: malformed JSON, schema violations, unknown types,
/// or dangling references. Distinct from mathematical check failures.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Named objects resolved from one or more documents.
struct Workspace {
    std::map<std::string, LieAlgebra> algebras;
    std::map<std::string, BilinearForm> forms;
    std::map<std::string, Subspace> subspaces;
    std::map<std::string, LinearMap> maps;
    std::map<std::string, RMatrix> rmatrices;
    std::map<std::string, ManinTriple> triples;
    std::map<std::string, AntiIsoPair> pairs;

    /// Declared type of each named object, in document order of appearance.
    std::map<std::string, std::string> types;
};

/// Parses a single document (throws ParseError).
Workspace parse_workspace(const std::string& text);

/// Parses several documents into one workspace; names must not collide.
/// Also reports, per input, which object names it contributed.
Workspace parse_documents(const std::vector<std::string>& texts,
                          std::vector<std::vector<std::string>>* per_doc_names = nullptr);

/// Reads files and parses them (missing/unreadable file is a ParseError).
Workspace load_documents(const std::vector<std::string>& paths,
                         std::vector<std::vector<std::string>>* per_doc_names = nullptr);

std::string read_file(const std::string& path);

/// Canonical serialization: sorted keys, two-space indent, rationals as
/// "p/q" strings, trailing newline.
std::string serialize_workspace(const Workspace& ws);

} // namespace mforge

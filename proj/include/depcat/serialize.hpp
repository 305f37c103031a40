#pragma once

// Versioned JSON structure documents: one section per layer, arrays sorted by
// identifier, composition/restriction/application tables as explicit triples.
// Round trip is bit-exact: deserialize(serialize(d)) == d.

#include <string>

#include "depcat/instances.hpp"

namespace depcat {

std::string serialize(const StructureDocument& doc);
// Throws ParseError (with byte position) on malformed JSON, IntegrityError on
// dangling identifiers.
StructureDocument deserialize(const std::string& bytes);

void save_document(const StructureDocument& doc, const std::string& path);
StructureDocument load_document(const std::string& path);

}  // namespace depcat

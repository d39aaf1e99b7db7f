#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "schrome/chromatic.hpp"
#include "schrome/complex.hpp"
#include "schrome/lattice.hpp"

namespace schrome {

enum class Format { plain, json, csv };
Format parse_format(const std::string& name);

// Facet files: plain text has one facet per line, labels separated by
// whitespace or commas, '#' starting a comment; JSON is {"facets": [[...]]}.
// The loader sniffs JSON by a leading '{'.
SimplicialComplex load_complex(const std::string& path);
SimplicialComplex parse_complex(std::istream& in);

std::string emit_facets(const SimplicialComplex& K, Format f);
std::string emit_faces(const SimplicialComplex& K, int s, Format f);

std::string format_simplex(const SimplicialComplex& K, VertexSet simplex);
std::string format_partition(const SimplicialComplex& K, const Partition& p);

std::string emit_polynomial(const IntPolynomial& p, Format f);
std::string emit_table(const SimplicialComplex& K, const ChromaticTable& t, Format f,
                       bool with_values = false);

// One element per line: sorted simplex list, |pi(S)|, mu(0,S).
std::string emit_lattice(const SimplicialComplex& K, const ChromaticLattice& L, Format f);

std::string emit_sequence(const std::vector<BigInt>& seq, Format f);

}  // namespace schrome

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "o1p/book_embedding.hpp"
#include "o1p/diagpicker.hpp"
#include "o1p/quadrangulation.hpp"

namespace o1p {

// Contents of an O1P/1 file: the plane part plus any declared crossing pairs.
struct O1PFile {
    PlaneEmbedding embedding;
    std::vector<CrossingPair> crossings;
};

// Throws ParseError (message carries the line number) for syntax problems and
// ValidationError, with the embedding error as cause, for bad structure.
O1PFile parse_o1p(std::string_view text);

// The optimal graph described by a file. Files without diag lines are read as
// Q(G). Structural failures surface as ValidationError with cause NotOptimal.
OptimalOnePlaneGraph load_optimal(std::string_view text, ValidationOptions options = {});

std::string serialize_o1p(const PlaneEmbedding& embedding);
// Writes one diag line per face: black pair, then white pair.
std::string serialize_o1p(const OptimalOnePlaneGraph& g);

// BOOK/1: spine, then upper and lower edge ids. Throws ParseError or
// MalformedBook (edge missing, repeated or out of range).
BookEmbedding parse_book(std::string_view text, const Quadrangulation& quad);
std::string serialize_book(const BookEmbedding& book);

// RBC/1: one `red <face> <u> <v>` line per red diagonal, then the stats line.
// Throws ParseError, or ForeignEdge if a line names no diagonal of its face.
RedBlueColoring parse_rbc(std::string_view text, const OptimalOnePlaneGraph& g);
std::string serialize_rbc(const RedBlueColoring& c, const OptimalOnePlaneGraph& g);

// Graphviz text; diagonals are dashed and tagged with their face. With a
// coloring, edges are drawn red or blue.
std::string export_dot(const OptimalOnePlaneGraph& g, const RedBlueColoring* coloring = nullptr);

// Vertices on a horizontal spine, upper edges as arcs above it and lower edges
// below.
std::string export_svg(const Quadrangulation& quad, const BookEmbedding& book);

// Whole-file access. Writes go to a temporary file that is renamed into place.
// Throws IoError.
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view text);

}  // namespace o1p

#pragma once

// JSON (de)serialization shared by the CLI and its integration tests.  All
// document layouts are described by the files under schemas/; emitters here
// keep key order fixed so identical inputs produce byte-identical output.

#include <string>
#include <vector>

#include <json.hpp>

#include "arrange/arrangement.hpp"
#include "arrange/cover.hpp"
#include "arrange/fp.hpp"
#include "arrange/obstruct.hpp"
#include "arrange/plumbing.hpp"
#include "arrange/symplectic.hpp"
#include "arrange/wiring.hpp"

namespace cli_io {

using Json = nlohmann::ordered_json;

// Shared arrangement document: { "lines": L, "points": P, "incidence": [...] }.
Json arrangement_to_json(const arrange::Arrangement& a);

// Accepts either the arrangement document itself or a search document with a
// "classes" array (then picks classes[index]).  Throws std::invalid_argument
// with a readable message on malformed input.
arrange::Arrangement arrangement_from_json(const Json& doc, int index = 0);

// Doubles rounded to 12 significant digits before insertion, so dumps carry
// at most that much precision and stay reproducible.
Json round12(double v);

// Exact rationals as { "num": ..., "den": ... }; components that do not fit
// in 64 bits are emitted as decimal strings.
Json rational_to_json(const arrange::Rational& r);
Json rational_to_json(const arrange::BigRational& r);

Json matrix_to_json(const arrange::SymMatrix& m);
Json fp_matrix_to_json(const arrange::FpMatrix& m);

Json cover_to_json(const arrange::CoverInvariants& c);
Json embedding_to_json(const arrange::SubArrangementEmbedding& e);
Json report_to_json(const arrange::ObstructionReport& r);

Json word_to_json(const arrange::WiringDiagram& w);
Json events_to_json(const std::vector<arrange::HomotopyEvent>& events);

Json plumbing_to_json(const arrange::PlumbingMatrix& pm);

// dump(2) plus a trailing newline: the byte-exact serialization used for
// every document the CLI prints.
std::string dump_doc(const Json& doc);

}  // namespace cli_io

#pragma once

#include <string>
#include <string_view>

#include "trigirth/matrix.hpp"
#include "trigirth/solver.hpp"

namespace trigirth {

// cyc format:  `cyc 1`, then `w <a> <b> <c> <p>/<q>` per support triple.
// far format:  `far 1`, then `y <i> <j> <p>/<q>` per non-zero row weight.

std::string emit_cycle_certificate(const CycleCertificate& cert);
/// Throws ParseError (including non-positive or repeated weights).
CycleCertificate parse_cycle_certificate(std::string_view text);

std::string emit_farkas(const IncidenceMatrix& m, const InfeasibleWitness& w);
/// Rows are resolved against `m`. Throws ParseError or VertexOutOfRange.
InfeasibleWitness parse_farkas(std::string_view text, const IncidenceMatrix& m);

}  // namespace trigirth

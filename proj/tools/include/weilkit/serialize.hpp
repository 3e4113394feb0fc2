#pragma once

#include <json.hpp>

#include "weilkit/classify.hpp"
#include "weilkit/cmfield.hpp"
#include "weilkit/density.hpp"
#include "weilkit/error.hpp"
#include "weilkit/honda_tate.hpp"
#include "weilkit/lattice.hpp"

// JSON encoders shared by the command-line front end and the acceptance harness.
// Keys are sorted (nlohmann::json stores objects in std::map), rationals are
// "num/den" strings and integers of unbounded size are decimal strings.
namespace weilkit::io {

using Json = nlohmann::json;

Json encode(const Integer& x);
Json encode(const Rational& x);
Json encode(const IntPoly& p);
Json encode(const SlopeProfile& s);
Json encode(const LocalInvariant& li);
Json encode(const EndoDescriptor& e);
Json encode(const SimpleIsogenyClass& c);
Json encode(const CyclicLattice& lat);
Json encode(const GaloisShape& s);
Json encode(const EndoAlgebraDescriptor& e);
Json encode(const DecompositionComponent& c);
Json encode(const DecompositionType& d);
Json encode(const EnumeratedRow& row);
Json encode(const DensityReport& r);
Json encode(const CyclicCMWitness& w);
Json encode(const Error& e);

std::string to_string(EndoKind k);
std::string to_string(AlgebraKind k);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace weilkit::io

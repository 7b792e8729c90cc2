#pragma once

#include <string>

#include "json.hpp"
#include "triplane/core/matrix.hpp"
#include "triplane/groebner/hilbert.hpp"
#include "triplane/groebner/ideal.hpp"
#include "triplane/resolutions/resolution.hpp"
#include "triplane/steiner/steiner.hpp"

namespace triplane {

using json = nlohmann::json;

/// Malformed input; `where` is a JSON pointer or a byte offset.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& where, const std::string& what)
      : UsageError("parse error at " + where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

// Shared text format: ring {prime, variables, weights, order}; a polynomial is
// a list of [exponent-vector, coefficient] pairs, coefficients printed in
// (-p/2, p/2].

json to_json(const Ring& r);
RingPtr ring_from_json(const json& j, const std::string& where = "/ring");

json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const RingPtr& r, const json& j, const std::string& where);

json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j, const std::string& where = "");

json to_json(const Ideal& I);
Ideal ideal_from_json(const json& j, const std::string& where = "");

json to_json(const HilbertData& h);
json betti_json(const FreeResolution& F);

json to_json(const LineInDualPlane& L);
json to_json(const SteinerPresentation& P);
/// Accepts either a presentation document or a bare matrix document.
SteinerPresentation presentation_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace triplane

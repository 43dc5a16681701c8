#ifndef HOPFCHECK_SERIALIZE_HPP_
#define HOPFCHECK_SERIALIZE_HPP_

#include <memory>
#include <string>
#include <vector>

#include "hopfcheck/group_twist.hpp"
#include "hopfcheck/hopf.hpp"

namespace hopfcheck {

// CycQ8 <-> ["a0", "a1", "a2", "a3"], coefficients as "p/q" strings.
// Decoders throw ModelFormat naming the offending field.
json cyc_to_json(const CycQ8& x);
CycQ8 cyc_from_json(const json& j, const std::string& field = "value");

json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j, const std::string& field = "matrix");

// {"blocks": [block matrices]}
json element_to_json(const AlgElement& x);
AlgElement element_from_json(const AlgebraPtr& alg, const json& j, const std::string& field = "element");

// {block_sizes, coproduct_matrix, counit_matrix, antipode_matrix}
json hopf_to_json(const HopfAlgebra& h);
// Shapes are checked; the axioms are not.
HopfPtr hopf_from_json(const json& j, const std::string& name = "loaded");

// Deterministic text form: dump(2) plus a trailing newline.
std::string dump_hopf(const HopfAlgebra& h);
// Io on failure.
void save_hopf(const HopfAlgebra& h, const std::string& path);
HopfPtr load_hopf(const std::string& path);

// User twist input: {generators: [matrix], action_unitary: matrix,
// central_element: matrix, cap: int}.
struct ModelFile {
  std::vector<CMatrix> generators;
  CMatrix action_unitary;
  CMatrix central_element;
  int cap = 64;
};

// ModelFormat with line/column for syntax errors, the field path otherwise.
ModelFile parse_model(const std::string& text);
ModelFile load_model(const std::string& path);
json model_to_json(const ModelFile& m);
// The built-in data: s1, s2, s3, conjugation by diag(i, -i), z = -I.
ModelFile vtilde_model_file();

struct UserModel {
  FiniteMatrixGroup group;
  HopfPtr functions;
  std::shared_ptr<const SmashProduct> smash;
  std::shared_ptr<const GradedTwist> twist;
};

UserModel build_user_model(const ModelFile& m);

} // namespace hopfcheck

#endif

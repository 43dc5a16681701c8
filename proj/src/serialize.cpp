#include "hopfcheck/serialize.hpp"

#include <fstream>
#include <sstream>

#include "hopfcheck/models.hpp"

namespace hopfcheck {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
  fail(ErrorKind::ModelFormat, "field '" + field + "': " + what);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    fail(ErrorKind::Io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::ModelFormat, what + " line " + std::to_string(line) + ", column " + std::to_string(col) +
                                     ": malformed JSON");
  }
}

const json& member(const json& j, const char* key, const std::string& field) {
  if (!j.is_object())
    bad_field(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    bad_field(field.empty() ? key : field + "." + key, "missing");
  return *it;
}

LinearMap map_from_json(const json& j, const AlgebraPtr& src, const AlgebraPtr& dst, const std::string& field) {
  CMatrix m = matrix_from_json(j, field);
  if (m.rows() != static_cast<std::size_t>(dst->dim()) || m.cols() != static_cast<std::size_t>(src->dim()))
    bad_field(field, "expected " + std::to_string(dst->dim()) + " x " + std::to_string(src->dim()) + ", got " +
                         std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
  return LinearMap(src, dst, std::move(m));
}

} // namespace

json cyc_to_json(const CycQ8& x) {
  json a = json::array();
  for (int k = 0; k < 4; ++k)
    a.push_back(x.coeff(k).str());
  return a;
}

CycQ8 cyc_from_json(const json& j, const std::string& field) {
  auto rat = [&](const json& v, const std::string& f) {
    try {
      if (v.is_string())
        return Rational::parse(v.get<std::string>());
      if (v.is_number_integer())
        return Rational(v.get<long long>());
    } catch (const Error& e) {
      bad_field(f, e.what());
    }
    bad_field(f, "expected a \"p/q\" string");
  };
  if (j.is_string() || j.is_number_integer())
    return CycQ8(rat(j, field));
  if (!j.is_array() || j.size() != 4)
    bad_field(field, "expected an array of 4 rational strings");
  return CycQ8(rat(j[0], field + "[0]"), rat(j[1], field + "[1]"), rat(j[2], field + "[2]"), rat(j[3], field + "[3]"));
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(cyc_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    bad_field(field, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    bad_field(field + "[0]", "expected a nonempty row");
  const std::size_t cols = j[0].size();
  CMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols)
      bad_field(rf, "expected a row of length " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = cyc_from_json(j[r][c], rf + "[" + std::to_string(c) + "]");
  }
  return m;
}

json element_to_json(const AlgElement& x) {
  json blocks = json::array();
  for (int b = 0; b < x.algebra()->num_blocks(); ++b)
    blocks.push_back(matrix_to_json(x.block(b)));
  return {{"blocks", blocks}};
}

AlgElement element_from_json(const AlgebraPtr& alg, const json& j, const std::string& field) {
  const json& blocks = member(j, "blocks", field);
  if (!blocks.is_array() || static_cast<int>(blocks.size()) != alg->num_blocks())
    bad_field(field + ".blocks", "expected " + std::to_string(alg->num_blocks()) + " blocks");
  std::vector<CMatrix> ms;
  for (int b = 0; b < alg->num_blocks(); ++b) {
    const std::string bf = field + ".blocks[" + std::to_string(b) + "]";
    CMatrix m = matrix_from_json(blocks[b], bf);
    const auto n = static_cast<std::size_t>(alg->block_size(b));
    if (m.rows() != n || m.cols() != n)
      bad_field(bf, "expected a " + std::to_string(n) + " x " + std::to_string(n) + " block");
    ms.push_back(std::move(m));
  }
  return AlgElement::from_blocks(alg, ms);
}

json hopf_to_json(const HopfAlgebra& h) {
  return {{"block_sizes", h.algebra->block_sizes()},
          {"coproduct_matrix", matrix_to_json(h.coproduct.matrix())},
          {"counit_matrix", matrix_to_json(h.counit.matrix())},
          {"antipode_matrix", matrix_to_json(h.antipode.matrix())}};
}

HopfPtr hopf_from_json(const json& j, const std::string& name) {
  const json& sizes = member(j, "block_sizes", "");
  if (!sizes.is_array() || sizes.empty())
    bad_field("block_sizes", "expected a nonempty array of positive integers");
  std::vector<int> bs;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (!sizes[k].is_number_integer() || sizes[k].get<long long>() <= 0)
      bad_field("block_sizes[" + std::to_string(k) + "]", "expected a positive integer");
    bs.push_back(sizes[k].get<int>());
  }
  auto h = std::make_shared<HopfAlgebra>();
  h->name = name;
  h->algebra = make_algebra(bs);
  h->coproduct = map_from_json(member(j, "coproduct_matrix", ""), h->algebra, tensor(h->algebra, h->algebra),
                               "coproduct_matrix");
  h->counit = map_from_json(member(j, "counit_matrix", ""), h->algebra, scalar_algebra(), "counit_matrix");
  h->antipode = map_from_json(member(j, "antipode_matrix", ""), h->algebra, h->algebra, "antipode_matrix");
  return h;
}

std::string dump_hopf(const HopfAlgebra& h) { return hopf_to_json(h).dump(2) + "\n"; }

void save_hopf(const HopfAlgebra& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    fail(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << dump_hopf(h);
  out.close();
  if (!out)
    fail(ErrorKind::Io, "write to '" + path + "' failed");
}

HopfPtr load_hopf(const std::string& path) {
  return hopf_from_json(parse_text(read_file(path), path), path);
}

ModelFile parse_model(const std::string& text) {
  json j = parse_text(text, "model file");
  if (!j.is_object())
    bad_field("<root>", "expected an object");
  ModelFile m;
  const json& gens = member(j, "generators", "");
  if (!gens.is_array() || gens.empty())
    bad_field("generators", "expected a nonempty array of matrices");
  for (std::size_t k = 0; k < gens.size(); ++k)
    m.generators.push_back(matrix_from_json(gens[k], "generators[" + std::to_string(k) + "]"));
  m.action_unitary = matrix_from_json(member(j, "action_unitary", ""), "action_unitary");
  m.central_element = matrix_from_json(member(j, "central_element", ""), "central_element");
  const json& cap = member(j, "cap", "");
  if (!cap.is_number_integer() || cap.get<long long>() <= 0)
    bad_field("cap", "expected a positive integer");
  m.cap = cap.get<int>();

  const std::size_t n = m.generators[0].rows();
  auto square = [&](const CMatrix& x, const std::string& f) {
    if (x.rows() != n || x.cols() != n)
      bad_field(f, "expected a " + std::to_string(n) + " x " + std::to_string(n) + " matrix");
  };
  for (std::size_t k = 0; k < m.generators.size(); ++k)
    square(m.generators[k], "generators[" + std::to_string(k) + "]");
  square(m.action_unitary, "action_unitary");
  square(m.central_element, "central_element");
  return m;
}

ModelFile load_model(const std::string& path) { return parse_model(read_file(path)); }

json model_to_json(const ModelFile& m) {
  json gens = json::array();
  for (const CMatrix& g : m.generators)
    gens.push_back(matrix_to_json(g));
  return {{"generators", gens},
          {"action_unitary", matrix_to_json(m.action_unitary)},
          {"central_element", matrix_to_json(m.central_element)},
          {"cap", m.cap}};
}

ModelFile vtilde_model_file() {
  ModelFile m;
  for (const CMatrix& g : vtilde_generators())
    m.generators.push_back(g);
  m.action_unitary = vtilde_action_unitary();
  m.central_element = CMatrix::identity(2) * CycQ8(-1);
  m.cap = 64;
  return m;
}

UserModel build_user_model(const ModelFile& m) {
  UserModel u;
  u.group = generate_group(m.generators, m.cap);
  u.functions = function_algebra(u.group);
  GroupAction2 theta = conjugation_action(u.group, m.action_unitary);
  u.smash = smash_product(u.group, theta);
  u.twist = graded_twist(u.group, central_grading(u.group, m.central_element), theta);
  return u;
}

} // namespace hopfcheck

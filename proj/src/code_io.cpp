#include "asc/code_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace asc {

using nlohmann::json;

std::string code_to_json(const SubspaceCode& code) {
  json doc;
  doc["beta"] = beta(code.field());
  doc["n"] = code.ambient_dim();
  json words = json::array();
  for (const auto& c : code.codewords()) {
    json entries = json::array();
    const Matrix& b = c.basis();
    for (Index i = 0; i < b.rows(); ++i)
      for (Index j = 0; j < b.cols(); ++j) entries.push_back({b(i, j).real(), b(i, j).imag()});
    words.push_back(std::move(entries));
  }
  doc["codewords"] = std::move(words);
  return doc.dump() + "\n";
}

SubspaceCode code_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("code file is not valid JSON: ") + e.what());
  }
  try {
    const int b = doc.at("beta").get<int>();
    if (b != 1 && b != 2) throw InvalidArgument("beta must be 1 or 2");
    const Field field = static_cast<Field>(b);
    const Index n = doc.at("n").get<Index>();
    if (n < 1) throw InvalidArgument("n must be positive");
    std::vector<Subspace> words;
    for (const auto& w : doc.at("codewords")) {
      const auto count = static_cast<Index>(w.size());
      if (count % n != 0) throw InvalidArgument("codeword entry count is not a multiple of n");
      Matrix basis(count / n, n);
      Index k = 0;
      for (const auto& entry : w) {
        if (!entry.is_array() || entry.size() != 2) throw InvalidArgument("entries must be [re, im] pairs");
        basis(k / n, k % n) = Complex(entry[0].get<double>(), entry[1].get<double>());
        ++k;
      }
      words.push_back(Subspace::from_orthonormal(std::move(basis), field));
    }
    return SubspaceCode(n, field, std::move(words));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed code file: ") + e.what());
  }
}

void save_code(const SubspaceCode& code, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << code_to_json(code);
}

SubspaceCode load_code(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return code_from_json(buf.str());
}

}  // namespace asc

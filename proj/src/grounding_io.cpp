#include "dfalc/grounding_io.hpp"

#include <fstream>
#include <sstream>

namespace dfalc {

using nlohmann::ordered_json;

ordered_json grounding_to_json(const Grounding& g) {
  ordered_json j;
  j["individuals"] = g.signature().individuals.names();
  ordered_json concepts = ordered_json::object();
  for (std::size_t i = 0; i < g.signature().concepts.size(); ++i) {
    const auto& v = g.concept_values(i);
    concepts[g.signature().concepts[i]] = std::vector<double>(v.data(), v.data() + v.size());
  }
  ordered_json roles = ordered_json::object();
  for (std::size_t i = 0; i < g.signature().roles.size(); ++i) {
    const auto& m = g.role_values(i);
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      std::vector<double> row(static_cast<std::size_t>(m.cols()));
      for (Eigen::Index c = 0; c < m.cols(); ++c) row[static_cast<std::size_t>(c)] = m(r, c);
      rows.push_back(row);
    }
    roles[g.signature().roles[i]] = rows;
  }
  j["concepts"] = concepts;
  j["roles"] = roles;
  return j;
}

namespace {

double degree(const ordered_json& v, const std::string& where) {
  if (!v.is_number()) throw InvalidGrounding(where + ": expected a number");
  const double x = v.get<double>();
  if (!(x >= 0.0 && x <= 1.0)) throw InvalidGrounding(where + ": degree outside [0,1]");
  return x;
}

void check_name(const std::string& name, const char* what) {
  if (!is_identifier(name)) throw InvalidGrounding(std::string("invalid ") + what + " name '" + name + "'");
}

}  // namespace

Grounding grounding_from_json(const ordered_json& j) {
  if (!j.is_object()) throw InvalidGrounding("grounding must be a JSON object");
  for (const char* key : {"individuals", "concepts", "roles"}) {
    if (!j.contains(key)) throw InvalidGrounding(std::string("missing key '") + key + "'");
  }
  const ordered_json& inds = j.at("individuals");
  const ordered_json& concepts = j.at("concepts");
  const ordered_json& roles = j.at("roles");
  if (!inds.is_array() || !concepts.is_object() || !roles.is_object()) {
    throw InvalidGrounding("'individuals' must be an array, 'concepts'/'roles' objects");
  }

  Signature sig;
  for (const auto& i : inds) {
    if (!i.is_string()) throw InvalidGrounding("individual names must be strings");
    const auto name = i.get<std::string>();
    check_name(name, "individual");
    if (sig.individuals.contains(name)) throw InvalidGrounding("duplicate individual '" + name + "'");
    sig.individuals.add(name);
  }
  const auto d = static_cast<Eigen::Index>(sig.individuals.size());

  DegreeTables<double> t;
  // File order of the keys defines the indexing.
  for (auto it = concepts.begin(); it != concepts.end(); ++it) {
    check_name(it.key(), "concept");
    const ordered_json& v = it.value();
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != d) {
      throw InvalidGrounding("concept '" + it.key() + "' must have " + std::to_string(d) + " entries");
    }
    Eigen::VectorXd vec(d);
    for (Eigen::Index a = 0; a < d; ++a) {
      vec[a] = degree(v[static_cast<std::size_t>(a)], "concept '" + it.key() + "'");
    }
    sig.concepts.add(it.key());
    t.concepts.push_back(std::move(vec));
  }
  for (auto it = roles.begin(); it != roles.end(); ++it) {
    check_name(it.key(), "role");
    if (sig.concepts.contains(it.key())) {
      throw InvalidGrounding("'" + it.key() + "' is both a concept and a role");
    }
    const ordered_json& rows = it.value();
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != d) {
      throw InvalidGrounding("role '" + it.key() + "' must have " + std::to_string(d) + " rows");
    }
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      const ordered_json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
        throw InvalidGrounding("role '" + it.key() + "' row " + std::to_string(r) + " must have " +
                               std::to_string(d) + " entries");
      }
      for (Eigen::Index c = 0; c < d; ++c) {
        m(r, c) = degree(row[static_cast<std::size_t>(c)], "role '" + it.key() + "'");
      }
    }
    sig.roles.add(it.key());
    t.roles.push_back(std::move(m));
  }
  return Grounding(std::move(sig), std::move(t));
}

std::string dump_grounding(const Grounding& g) { return grounding_to_json(g).dump(2) + "\n"; }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

Grounding load_grounding_file(const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_text_file(path));
  } catch (const ordered_json::parse_error& e) {
    throw InvalidGrounding("'" + path + "': " + e.what());
  }
  return grounding_from_json(j);
}

void save_grounding_file(const Grounding& g, const std::string& path) {
  write_text_file(path, dump_grounding(g));
}

}  // namespace dfalc

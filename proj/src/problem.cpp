#include "skewder/problem.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "skewder/cohomology.hpp"

namespace skewder {

namespace {

using Json = nlohmann::ordered_json;

struct TaskSpec {
  enum class Kind {
    validate,
    cohomology,
    derivations,
    decompose,
    fractional,
    equivalent,
    cross_check,
    paper_examples,
  };
  Kind kind = Kind::validate;
  int degree = 1;       // cohomology
  Json other_sigma;     // equivalent; defaults to "zeta"
};

struct ProblemDoc {
  FieldSpec field;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> relations;
  Json sigma = "zeta";
  Json lambda = "id";
  Json beta = "identity";
  std::vector<TaskSpec> tasks;
};

[[noreturn]] void fail_at_byte(const std::string& text, std::size_t byte,
                               const std::string& what) {
  int line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw ParseError(what, line, column);
}

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
    throw ParseError("bad pair key '" + key + "': expected \"x,y\"");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

TaskSpec parse_task(const Json& j) {
  TaskSpec task;
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "validate") task.kind = TaskSpec::Kind::validate;
    else if (name == "cohomology") task.kind = TaskSpec::Kind::cohomology;
    else if (name == "derivations") task.kind = TaskSpec::Kind::derivations;
    else if (name == "decompose") task.kind = TaskSpec::Kind::decompose;
    else if (name == "fractional") task.kind = TaskSpec::Kind::fractional;
    else if (name == "equivalent") task.kind = TaskSpec::Kind::equivalent;
    else if (name == "cross-check") task.kind = TaskSpec::Kind::cross_check;
    else if (name == "paper-examples") task.kind = TaskSpec::Kind::paper_examples;
    else throw ParseError("unknown task '" + name + "'");
    return task;
  }
  if (j.is_object() && j.size() == 1) {
    if (j.contains("cohomology")) {
      task.kind = TaskSpec::Kind::cohomology;
      const auto& body = j.at("cohomology");
      if (!body.is_object() || !body.contains("degree") ||
          !body.at("degree").is_number_integer())
        throw ParseError("cohomology task needs an integer \"degree\"");
      task.degree = body.at("degree").get<int>();
      if (task.degree < 0) throw ParseError("cohomology degree must be >= 0");
      return task;
    }
    if (j.contains("equivalent")) {
      task.kind = TaskSpec::Kind::equivalent;
      const auto& body = j.at("equivalent");
      if (!body.is_object() || !body.contains("sigma"))
        throw ParseError("equivalent task needs a \"sigma\" to compare with");
      task.other_sigma = body.at("sigma");
      return task;
    }
  }
  throw ParseError("bad task entry: " + j.dump());
}

ProblemDoc parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_at_byte(text, e.byte, e.what());
  }
  ProblemDoc doc;
  try {
    if (!j.is_object()) throw ParseError("problem file must be a JSON object");
    if (!j.contains("field") || !j.at("field").is_string())
      throw ParseError("missing string \"field\" (e.g. \"Q\" or \"F5\")");
    doc.field = FieldSpec::parse(j.at("field").get<std::string>());

    if (!j.contains("poset") || !j.at("poset").is_object())
      throw ParseError("missing \"poset\" object");
    const auto& poset = j.at("poset");
    if (!poset.contains("elements") || !poset.at("elements").is_array())
      throw ParseError("poset needs an \"elements\" array");
    for (const auto& e : poset.at("elements")) {
      if (!e.is_string()) throw ParseError("poset elements must be strings");
      const std::string token = e.get<std::string>();
      if (token.empty() || token.find(',') != std::string::npos)
        throw ParseError("bad element token '" + token +
                         "': must be nonempty and comma-free");
      doc.elements.push_back(token);
    }
    if (poset.contains("relations")) {
      if (!poset.at("relations").is_array())
        throw ParseError("poset \"relations\" must be an array of pairs");
      for (const auto& r : poset.at("relations")) {
        if (!r.is_array() || r.size() != 2 || !r[0].is_string() ||
            !r[1].is_string())
          throw ParseError("each relation must be a [\"x\", \"y\"] pair");
        doc.relations.emplace_back(r[0].get<std::string>(),
                                   r[1].get<std::string>());
      }
    }
    if (j.contains("sigma")) doc.sigma = j.at("sigma");
    if (j.contains("lambda")) doc.lambda = j.at("lambda");
    if (j.contains("beta")) doc.beta = j.at("beta");
    if (j.contains("tasks")) {
      if (!j.at("tasks").is_array())
        throw ParseError("\"tasks\" must be an array");
      for (const auto& t : j.at("tasks")) doc.tasks.push_back(parse_task(t));
    }
    if (doc.tasks.empty()) doc.tasks.push_back(TaskSpec{});
    for (const auto& [key, value] : j.items()) {
      (void)value;
      if (key != "field" && key != "poset" && key != "sigma" &&
          key != "lambda" && key != "beta" && key != "tasks")
        throw ParseError("unknown top-level key \"" + key + "\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return doc;
}

PosetAutomorphism build_lambda(const Json& j, const Poset& p) {
  if (j.is_string()) {
    if (j.get<std::string>() == "id")
      return PosetAutomorphism::identity(p.size());
    throw ParseError("lambda must be \"id\" or a mapping object");
  }
  if (!j.is_object()) throw ParseError("lambda must be \"id\" or an object");
  std::map<std::string, std::string> mapping;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("lambda values must be strings");
    mapping[key] = value.get<std::string>();
  }
  return validate_automorphism(p, mapping);
}

template <typename K>
std::map<std::pair<int, int>, K> parse_pair_table(const Json& j,
                                                  const Poset& p) {
  std::map<std::pair<int, int>, K> table;
  for (const auto& [key, value] : j.items()) {
    const auto [a, b] = split_pair_key(key);
    if (!value.is_string())
      throw ParseError("scalar values must be strings, got " + value.dump());
    table[{p.index_of(a), p.index_of(b)}] =
        ScalarTraits<K>::parse(value.template get<std::string>());
  }
  return table;
}

template <typename K>
MultiplicativeElement<K> build_sigma(const Json& j,
                                     const std::shared_ptr<const Poset>& p) {
  if (j.is_string()) {
    if (j.template get<std::string>() == "zeta")
      return zeta_multiplicative<K>(p);
    throw ParseError("sigma must be \"zeta\", {\"covers\": ...} or {\"table\": ...}");
  }
  if (j.is_object() && j.size() == 1 && j.contains("covers"))
    return multiplicative_from_covers(p,
                                      parse_pair_table<K>(j.at("covers"), *p));
  if (j.is_object() && j.size() == 1 && j.contains("table")) {
    IncidenceElement<K> s(p);
    for (const auto& [key, value] : parse_pair_table<K>(j.at("table"), *p))
      s.set(key.first, key.second, value);
    return validate_multiplicative(s);
  }
  throw ParseError("sigma must be \"zeta\", {\"covers\": ...} or {\"table\": ...}");
}

template <typename K>
IncidenceElement<K> build_beta(const Json& j,
                               const std::shared_ptr<const Poset>& p) {
  if (j.is_string()) {
    if (j.template get<std::string>() == "identity")
      return delta_identity<K>(p);
    throw ParseError("beta must be \"identity\" or a pair-value object");
  }
  if (!j.is_object())
    throw ParseError("beta must be \"identity\" or a pair-value object");
  IncidenceElement<K> beta(p);
  for (const auto& [key, value] : parse_pair_table<K>(j, *p))
    beta.set(key.first, key.second, value);
  return beta;
}

std::string tuple_label(const Poset& p, const Multichain& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += p.token(tuple[i]);
  }
  return out + ")";
}

/** Collects the per-task report in both renderings. */
class Report {
 public:
  Report(const ProblemDoc& doc, const Poset& p) {
    text_ << "field: " << doc.field.str() << "\n";
    text_ << "poset: " << p.size() << " elements, " << p.pair_count()
          << " comparable pairs, " << p.cover_pairs().size()
          << " cover pairs\n";
    doc_["field"] = doc.field.str();
    Json poset;
    poset["elements"] = doc.elements;
    Json relations = Json::array();
    for (const auto& [a, b] : doc.relations)
      relations.push_back(Json::array({a, b}));
    poset["relations"] = std::move(relations);
    doc_["poset"] = std::move(poset);
    doc_["results"] = Json::array();
  }

  std::ostream& text() { return text_; }
  void add_result(Json j) { doc_["results"].push_back(std::move(j)); }

  void print(bool json, std::ostream& out) const {
    if (json)
      out << doc_.dump(2) << "\n";
    else
      out << text_.str();
  }

 private:
  std::ostringstream text_;
  Json doc_;
};

template <typename K>
int run_tasks(const ProblemDoc& doc, const RunOptions& options,
              std::ostream& out) {
  auto poset = make_poset(doc.elements, doc.relations);
  const auto lam = build_lambda(doc.lambda, *poset);
  const auto sigma = build_sigma<K>(doc.sigma, poset);
  const auto beta = build_beta<K>(doc.beta, poset);
  const auto spec = AutomorphismSpec<K>::make(beta, sigma, lam);
  const Twist<K>& twist = spec.twist();

  Report report(doc, *poset);
  int status = 0;
  for (const auto& task : doc.tasks) {
    switch (task.kind) {
      case TaskSpec::Kind::validate: {
        report.text() << "task validate: ok\n";
        report.add_result({{"task", "validate"}, {"status", "ok"}});
        break;
      }
      case TaskSpec::Kind::cohomology: {
        if (task.degree > options.max_degree)
          throw ParseError("cohomology degree " + std::to_string(task.degree) +
                           " exceeds --max-degree " +
                           std::to_string(options.max_degree));
        const auto r = compute_cohomology(*poset, twist, task.degree);
        report.text() << "task cohomology degree=" << task.degree
                      << ": dim C = " << r.cochains.dim()
                      << ", dim Z = " << r.dim_cocycles
                      << ", dim B = " << r.dim_coboundaries
                      << ", dim H = " << r.dim_cohomology << "\n";
        Json reps = Json::array();
        for (Eigen::Index col = 0; col < r.representatives.cols(); ++col) {
          report.text() << "  representative " << col + 1 << ":";
          Json rep = Json::array();
          bool first = true;
          for (Eigen::Index row = 0; row < r.representatives.rows(); ++row) {
            const K& v = r.representatives(row, col);
            if (is_zero(v)) continue;
            const auto& tuple =
                r.cochains.basis[static_cast<std::size_t>(row)];
            report.text() << (first ? " " : ", ")
                          << tuple_label(*poset, tuple) << "="
                          << ScalarTraits<K>::str(v);
            Json entry;
            Json labels = Json::array();
            for (int e : tuple) labels.push_back(poset->token(e));
            entry["tuple"] = std::move(labels);
            entry["value"] = ScalarTraits<K>::str(v);
            rep.push_back(std::move(entry));
            first = false;
          }
          report.text() << "\n";
          reps.push_back(std::move(rep));
        }
        report.add_result({{"task", "cohomology"},
                           {"degree", task.degree},
                           {"dim_cochains", r.cochains.dim()},
                           {"dim_Z", r.dim_cocycles},
                           {"dim_B", r.dim_coboundaries},
                           {"dim_H", r.dim_cohomology},
                           {"representatives", std::move(reps)}});
        break;
      }
      case TaskSpec::Kind::derivations: {
        const auto r = degree_one_cross_check(spec);
        report.text() << "task derivations: dim derivations = "
                      << r.dim_derivations << ", dim inner = " << r.dim_inner
                      << ", dim additive = " << r.dim_additive
                      << ", dim potential = " << r.dim_potential
                      << ", dim inner_cap_additive = "
                      << r.dim_inner_cap_additive << "\n";
        report.add_result({{"task", "derivations"},
                           {"dim_derivations", r.dim_derivations},
                           {"dim_inner", r.dim_inner},
                           {"dim_additive", r.dim_additive},
                           {"dim_potential", r.dim_potential},
                           {"dim_inner_cap_additive", r.dim_inner_cap_additive}});
        break;
      }
      case TaskSpec::Kind::decompose: {
        const auto basis = derivation_space(spec);
        bool exact = true;
        const auto core = AutomorphismSpec<K>::core(twist.sigma, twist.lam);
        for (const auto& d : basis) {
          const auto core_d =
              transport_by_beta(d, spec.beta(), BetaTransport::to_core);
          const auto parts = decompose_derivation(core_d, twist);
          exact = exact && core_d == inner_derivation(parts.inner_part, core) +
                                         additive_derivation(parts.additive_part);
        }
        report.text() << "task decompose: " << basis.size()
                      << " basis derivations, "
                      << (exact ? "all decompositions exact"
                                : "EXACTNESS FAILED")
                      << "\n";
        report.add_result({{"task", "decompose"},
                           {"basis_dimension", basis.size()},
                           {"exact", exact}});
        if (!exact) status = std::max(status, 2);
        break;
      }
      case TaskSpec::Kind::fractional: {
        const auto check = is_fractional(twist.sigma);
        if (check.fractional) {
          report.text() << "task fractional: yes;";
          Json eta;
          for (int x = 0; x < poset->size(); ++x) {
            report.text() << (x ? ", " : " ") << "eta(" << poset->token(x)
                          << ")="
                          << ScalarTraits<K>::str(
                                 check.eta[static_cast<std::size_t>(x)]);
            eta[poset->token(x)] = ScalarTraits<K>::str(
                check.eta[static_cast<std::size_t>(x)]);
          }
          report.text() << "\n";
          report.add_result({{"task", "fractional"},
                             {"fractional", true},
                             {"eta", std::move(eta)}});
        } else {
          report.text() << "task fractional: no; cycle";
          Json cycle = Json::array();
          for (std::size_t i = 0; i < check.cycle.size(); ++i) {
            report.text() << (i ? " -> " : " ")
                          << poset->token(check.cycle[i]);
            cycle.push_back(poset->token(check.cycle[i]));
          }
          report.text() << " has product "
                        << ScalarTraits<K>::str(check.cycle_product) << "\n";
          report.add_result({{"task", "fractional"},
                             {"fractional", false},
                             {"cycle", std::move(cycle)},
                             {"cycle_product",
                              ScalarTraits<K>::str(check.cycle_product)}});
        }
        break;
      }
      case TaskSpec::Kind::equivalent: {
        const auto other =
            task.other_sigma.is_null()
                ? zeta_multiplicative<K>(poset)
                : build_sigma<K>(task.other_sigma, poset);
        const bool equivalent = are_equivalent(twist.sigma, other);
        report.text() << "task equivalent: "
                      << (equivalent ? "true" : "false") << "\n";
        report.add_result({{"task", "equivalent"}, {"equivalent", equivalent}});
        break;
      }
      case TaskSpec::Kind::cross_check: {
        const auto r = degree_one_cross_check(spec);
        report.text() << "task cross-check: dim derivations - dim inner = "
                      << r.dim_derivations - r.dim_inner
                      << ", dim H^1 = " << r.dim_h1
                      << ", dim additive = " << r.dim_additive
                      << ", dim Z^1 = " << r.dim_z1
                      << ", dim inner_cap_additive = "
                      << r.dim_inner_cap_additive
                      << ", dim B^1 = " << r.dim_b1 << " -> "
                      << (r.consistent() ? "consistent" : "INCONSISTENT")
                      << "\n";
        report.add_result({{"task", "cross-check"},
                           {"dim_derivations", r.dim_derivations},
                           {"dim_inner", r.dim_inner},
                           {"dim_H1", r.dim_h1},
                           {"dim_additive", r.dim_additive},
                           {"dim_Z1", r.dim_z1},
                           {"dim_potential", r.dim_potential},
                           {"dim_inner_cap_additive", r.dim_inner_cap_additive},
                           {"dim_B1", r.dim_b1},
                           {"consistent", r.consistent()}});
        if (!r.consistent()) status = std::max(status, 2);
        break;
      }
      case TaskSpec::Kind::paper_examples: {
        const auto results = paper_example_suite(doc.field);
        bool all_pass = true;
        Json body = Json::array();
        report.text() << "task paper-examples:\n";
        for (std::size_t i = 0; i < results.size(); ++i) {
          const auto& r = results[i];
          report.text() << "  [" << i + 1 << "] " << r.name << ": "
                        << r.computed << " (expected " << r.expected << ") -> "
                        << (r.pass ? "pass" : "FAIL") << "\n";
          body.push_back({{"name", r.name},
                          {"expected", r.expected},
                          {"computed", r.computed},
                          {"pass", r.pass}});
          all_pass = all_pass && r.pass;
        }
        report.add_result(
            {{"task", "paper-examples"}, {"results", std::move(body)}});
        if (!all_pass) status = std::max(status, 2);
        break;
      }
    }
  }
  report.print(options.json, out);
  return status;
}

}  // namespace

int run_problem_text(const std::string& text, const RunOptions& options,
                     std::ostream& out, std::ostream& err) {
  try {
    const ProblemDoc doc = parse_problem(text);
    return with_scalar(doc.field, [&](auto tag) {
      using K = typename decltype(tag)::type;
      return run_tasks<K>(doc, options, out);
    });
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

int run_problem_file(const std::string& path, const RunOptions& options,
                     std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read '" << path << "'\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return run_problem_text(buffer.str(), options, out, err);
}

int run_paper_examples(const FieldSpec& field, bool json, std::ostream& out,
                       std::ostream& err) {
  std::vector<PaperExampleResult> results;
  try {
    results = paper_example_suite(field);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  bool all_pass = true;
  if (json) {
    Json body = Json::array();
    for (const auto& r : results) {
      body.push_back({{"name", r.name},
                      {"expected", r.expected},
                      {"computed", r.computed},
                      {"pass", r.pass}});
      all_pass = all_pass && r.pass;
    }
    out << Json({{"field", field.str()}, {"results", std::move(body)}}).dump(2)
        << "\n";
  } else {
    out << "paper examples over " << field.str() << ":\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& r = results[i];
      out << "  [" << i + 1 << "] " << r.name << ": " << r.computed
          << " (expected " << r.expected << ") -> "
          << (r.pass ? "pass" : "FAIL") << "\n";
      all_pass = all_pass && r.pass;
    }
    out << (all_pass ? "all examples pass\n" : "SOME EXAMPLES FAILED\n");
  }
  return all_pass ? 0 : 2;
}

}  // namespace skewder

#include "rover/json_io.hpp"

#include "rover/errors.hpp"

namespace rover {

namespace {

void expect(bool ok, const char* what) { require(ok, Errc::parse_error, what); }

}  // namespace

json tree_to_json(const Tree& t) {
  json j = json::array();
  for (const Address& a : t.leaves()) j.push_back(a);
  return j;
}

Tree tree_from_json(const json& j) {
  expect(j.is_array(), "tree must be an array of addresses");
  std::vector<Address> leaves;
  for (const auto& a : j) {
    expect(a.is_string(), "leaf address must be a string");
    Address addr = a.get<std::string>();
    for (char c : addr) expect(c == '0' || c == '1', "leaf address must be binary");
    leaves.push_back(std::move(addr));
  }
  return Tree::from_leaves(std::move(leaves));
}

json forest_to_json(const Forest& f) {
  json j = json::array();
  for (const Tree& t : f.trees()) j.push_back(tree_to_json(t));
  return j;
}

Forest forest_from_json(const json& j) {
  expect(j.is_array() && !j.empty(), "forest must be a nonempty array of trees");
  std::vector<Tree> trees;
  trees.reserve(j.size());
  for (const auto& t : j) trees.push_back(tree_from_json(t));
  return Forest(std::move(trees));
}

json element_to_json(const GroupoidElement& g) {
  json j;
  j["m"] = g.domain_roots();
  j["m2"] = g.range_roots();
  j["f1"] = forest_to_json(g.f1);
  json alpha = json::array();
  for (int i = 0; i < g.alpha.size(); ++i) alpha.push_back(g.alpha(i) + 1);
  j["alpha"] = std::move(alpha);
  std::string labels;
  for (Klein k : g.labels) labels += klein_char(k);
  j["labels"] = labels;
  j["f2"] = forest_to_json(g.f2);
  return j;
}

GroupoidElement element_from_json(const json& j) {
  expect(j.is_object(), "element must be an object");
  expect(j.contains("f1") && j.contains("f2") && j.contains("alpha") && j.contains("labels"),
         "element needs f1, alpha, labels, f2");
  Forest f1 = forest_from_json(j.at("f1"));
  Forest f2 = forest_from_json(j.at("f2"));
  const auto& ja = j.at("alpha");
  expect(ja.is_array(), "alpha must be an array");
  std::vector<int> images;
  images.reserve(ja.size());
  for (const auto& v : ja) {
    expect(v.is_number_integer(), "alpha images must be integers");
    images.push_back(v.get<int>() - 1);
  }
  const auto& jl = j.at("labels");
  expect(jl.is_string(), "labels must be a string");
  std::vector<Klein> labels;
  for (char c : jl.get<std::string>()) labels.push_back(klein_from_char(c));
  if (j.contains("m")) expect(j.at("m").get<int>() == f1.roots(), "m does not match f1");
  if (j.contains("m2")) expect(j.at("m2").get<int>() == f2.roots(), "m2 does not match f2");
  return make_element(std::move(f1), Permutation(std::move(images)), std::move(labels),
                      std::move(f2));
}

}  // namespace rover

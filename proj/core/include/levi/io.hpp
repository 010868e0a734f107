#ifndef LEVI_IO_HPP
#define LEVI_IO_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "levi/analysis.hpp"
#include "levi/bimodule.hpp"
#include "levi/hnn.hpp"
#include "levi/selfsim.hpp"

namespace levi {

using Json = nlohmann::ordered_json;

Json group_to_json(const GroupPtr& g);
GroupPtr group_from_json(const Json& j);

Json bimodule_to_json(const BimodulePtr& b);
BimodulePtr bimodule_from_json(const Json& j);

Json group_data_to_json(const GroupData& d);
GroupData group_data_from_json(const Json& j);

Json action_to_json(const SelfSimilarAction& a);
SelfSimilarAction action_from_json(const Json& j);

Json rees_to_json(const ReesElement& e);
ReesElement rees_from_json(const Json& j, const SelfSimilarAction& a);

Json report_to_json(const PropertyReport& r);

/// "(ab,s)" -> ReesElement over the action's alphabet and group labels.
ReesElement parse_rees(const SelfSimilarAction& a, const std::string& text);

/// Named registry of validated objects: groups, bimodules, group data,
/// actions and HNN presentations, either bundled or loaded from files.
class Workspace {
 public:
  /// The bundled corpus: free2, c2-swap, c2-flat, c2-twist, c2-kernel,
  /// s3-a3-identity, rees-c4-square, rees-c4-inv, bs12, bs23.
  static Workspace with_corpus();

  void add_group(const std::string& name, GroupPtr g);
  void add_bimodule(const std::string& name, BimodulePtr b);
  void add_group_data(const std::string& name, GroupData d);
  void add_action(const std::string& name, SelfSimilarAction a);
  void add_presentation(const std::string& name, HNNPresentation p);

  /// Parses a JSON file by its "kind" tag, validates and registers it.
  /// Returns the registered name.
  std::string load_file(const std::string& path);
  std::string load_json(const Json& j, const std::string& fallback_name);

  bool has_action(const std::string& name) const { return actions_.count(name) != 0; }
  bool has_presentation(const std::string& name) const {
    return presentations_.count(name) != 0;
  }
  const SelfSimilarAction& action(const std::string& name) const;
  /// Also resolves "<action>:atoms" to the atom bimodule of an action.
  BimodulePtr bimodule(const std::string& name) const;
  GroupPtr group(const std::string& name) const;
  const GroupData& group_data(const std::string& name) const;
  const HNNPresentation& presentation(const std::string& name) const;

  /// name -> kind, for `corpus list`.
  std::map<std::string, std::string> catalog() const;
  Json describe(const std::string& name) const;

 private:
  std::map<std::string, GroupPtr> groups_;
  std::map<std::string, BimodulePtr> bimodules_;
  std::map<std::string, GroupData> group_data_;
  std::map<std::string, SelfSimilarAction> actions_;
  std::map<std::string, HNNPresentation> presentations_;
};

}  // namespace levi

#endif  // LEVI_IO_HPP

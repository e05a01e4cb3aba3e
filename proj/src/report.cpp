#include <json.hpp>

#include "ecctree/verify.hpp"

namespace ecctree {

std::string to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["order"] = report.order;
  doc["index_spec"] = report.index_spec;
  if (report.diameter) doc["diameter"] = *report.diameter;
  doc["tree_count"] = report.tree_count();
  doc["passed"] = report.passed();

  auto classes = nlohmann::ordered_json::array();
  for (const auto& c : report.classes) {
    nlohmann::ordered_json entry;
    entry["key"] = c.key;
    entry["size"] = c.size;
    entry["extremal_value"] = c.extremal_value.to_string();
    auto attainers = nlohmann::ordered_json::array();
    for (const auto& form : c.attainers) attainers.push_back(form.hex());
    entry["attainers"] = std::move(attainers);
    entry["constructor"] = c.constructor.hex();
    entry["flags"] = {
        {"extremal_is_constructor", c.extremal_is_constructor},
        {"unique", c.unique},
        {"uniqueness_required", c.uniqueness_required},
        {"uniqueness_threshold_respected", c.uniqueness_threshold_respected},
        {"tie", c.tie},
        {"status", std::string(to_string(c.status))},
    };
    classes.push_back(std::move(entry));
  }
  doc["classes"] = std::move(classes);
  return doc.dump(2);
}

}  // namespace ecctree

#include "msn/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace msn {

using nlohmann::json;

Instance instance_from_json(const std::string& text) {
  json doc = json::parse(text);
  Instance inst;
  int i = 0;
  for (const auto& t : doc.value("tasks", json::array()))
    inst.tasks.push_back({i++, t.at("rst").get<double>(), t.at("weight").get<double>()});
  int j = 0;
  for (const auto& w : doc.value("workers", json::array())) {
    double lambda = w.at("lambda").get<double>();
    Worker worker = make_worker(j++, lambda);
    if (w.contains("contact")) worker.contact = w.at("contact").get<double>();
    inst.workers.push_back(worker);
  }
  inst.validate();
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["tasks"] = json::array();
  for (const Task& t : inst.tasks)
    doc["tasks"].push_back({{"rst", t.rst}, {"weight", t.weight}});
  doc["workers"] = json::array();
  for (const Worker& w : inst.workers) {
    json jw{{"lambda", w.rate}};
    if (w.contact != 2.0 / w.rate) jw["contact"] = w.contact;
    doc["workers"].push_back(jw);
  }
  return doc.dump(2) + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_instance: cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return instance_from_json(text);
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_instance: cannot open " + path.string());
  out << instance_to_json(inst);
}

std::string schedule_to_json(const Instance& inst, const Schedule& sched) {
  json doc;
  doc["workers"] = json::array();
  for (int j = 0; j < inst.m(); ++j) {
    json tasks = json::array();
    for (int id : sched.assignment[j]) tasks.push_back(id + 1);
    doc["workers"].push_back({{"id", j + 1}, {"tasks", tasks}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace msn

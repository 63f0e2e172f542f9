#pragma once

#include <filesystem>
#include <string>

#include "msn/core.hpp"

namespace msn {

// Instance interchange format, the input of every CLI subcommand:
//   {"tasks":[{"rst":..,"weight":..},...],
//    "workers":[{"lambda":..},...]}
// Worker contact defaults to 2/lambda; an explicit "contact" field
// overrides it. Ids are implicit (position, 1-based in serialized form).
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

// {"workers":[{"id":1,"tasks":[...]}...]} with 1-based ids.
std::string schedule_to_json(const Instance& inst, const Schedule& sched);

}  // namespace msn

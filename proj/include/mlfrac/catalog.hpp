#pragma once

#include <string>
#include <vector>

namespace mlfrac {

enum class Resolution { as_stated, corrected, reading, audited };

const char* to_string(Resolution r);

// One identity whose stated form and implemented form are both on record.
struct CatalogEntry {
    std::string id;
    std::string topic;
    std::string stated;
    std::string implemented;
    Resolution resolution;
    std::string evidence;  // how the implemented form was confirmed
};

const std::vector<CatalogEntry>& identity_catalog();

}  // namespace mlfrac

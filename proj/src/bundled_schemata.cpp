#include "dtforge/bundled_schemata.hpp"

#include <algorithm>
#include <array>
#include <fstream>

#include "dtforge/error.hpp"

namespace dtforge::bundled {

// The group_comparison and data_analysis identifiers are the registered ones;
// the remaining suffixes are catalogue-assigned placeholders until the rest of
// the taxonomy is published in the registry.

namespace {

constexpr std::string_view kGroupComparison = R"({
  "pid": "https://doi.org/21.T11969/b9335ce2c99ed87735a6",
  "constructor_name": "group_comparison",
  "label": "Group comparison",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "executes",
      "target": "https://doi.org/21.T11969/0e5a08d6fbed489c2e65",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#executes"
    },
    {
      "name": "targets",
      "target": "https://doi.org/21.T11969/3b8d310920107bcf5198",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#targets"
    },
    {
      "name": "has_input",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002233"
    },
    {
      "name": "has_output",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002234"
    }
  ]
}
)";

constexpr std::string_view kAlgorithmEvaluation = R"({
  "pid": "https://doi.org/21.T11969/3a1c64f2b7d9045e8a21",
  "constructor_name": "algorithm_evaluation",
  "label": "Algorithm evaluation",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "executes",
      "target": "https://doi.org/21.T11969/0e5a08d6fbed489c2e65",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#executes"
    },
    {
      "name": "targets",
      "target": "https://doi.org/21.T11969/3b8d310920107bcf5198",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#targets"
    },
    {
      "name": "has_input",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002233"
    },
    {
      "name": "has_output",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002234"
    }
  ]
}
)";

constexpr std::string_view kMultilevelAnalysis = R"({
  "pid": "https://doi.org/21.T11969/5b2d75a3c8ea156f9b32",
  "constructor_name": "multilevel_analysis",
  "label": "Multilevel analysis",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "executes",
      "target": "https://doi.org/21.T11969/0e5a08d6fbed489c2e65",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#executes"
    },
    {
      "name": "targets",
      "target": "https://doi.org/21.T11969/3b8d310920107bcf5198",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#targets"
    },
    {
      "name": "has_input",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002233"
    },
    {
      "name": "has_output",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002234"
    }
  ]
}
)";

constexpr std::string_view kClassDiscovery = R"({
  "pid": "https://doi.org/21.T11969/7c3e86b4d9fb267a0c43",
  "constructor_name": "class_discovery",
  "label": "Class discovery",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "executes",
      "target": "https://doi.org/21.T11969/0e5a08d6fbed489c2e65",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#executes"
    },
    {
      "name": "targets",
      "target": "https://doi.org/21.T11969/3b8d310920107bcf5198",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#targets"
    },
    {
      "name": "has_input",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002233"
    },
    {
      "name": "has_output",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002234"
    }
  ]
}
)";

constexpr std::string_view kClassPrediction = R"({
  "pid": "https://doi.org/21.T11969/9d4f97c5eadc378b1d54",
  "constructor_name": "class_prediction",
  "label": "Class prediction",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "executes",
      "target": "https://doi.org/21.T11969/0e5a08d6fbed489c2e65",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#executes"
    },
    {
      "name": "targets",
      "target": "https://doi.org/21.T11969/3b8d310920107bcf5198",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#targets"
    },
    {
      "name": "has_input",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002233"
    },
    {
      "name": "has_output",
      "target": "https://doi.org/21.T11969/4c9e421a31218cd06209",
      "property_uri": "http://purl.obolibrary.org/obo/RO_0002234"
    }
  ]
}
)";

constexpr std::string_view kDataAnalysis = R"({
  "pid": "https://doi.org/21.T11969/feeb33ad3e4440682a4d",
  "constructor_name": "data_analysis",
  "label": "Data analysis",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "is_implemented_by",
      "target": "scalar",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#is_implemented_by"
    },
    {
      "name": "has_part",
      "target": [
        "https://doi.org/21.T11969/3a1c64f2b7d9045e8a21",
        "https://doi.org/21.T11969/5b2d75a3c8ea156f9b32",
        "https://doi.org/21.T11969/b9335ce2c99ed87735a6",
        "https://doi.org/21.T11969/7c3e86b4d9fb267a0c43",
        "https://doi.org/21.T11969/9d4f97c5eadc378b1d54"
      ],
      "property_uri": "http://purl.obolibrary.org/obo/BFO_0000051",
      "repeatable": true
    }
  ]
}
)";

constexpr std::string_view kSoftwareMethod = R"({
  "pid": "https://doi.org/21.T11969/0e5a08d6fbed489c2e65",
  "constructor_name": "software_method",
  "label": "Software method",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "is_implemented_by",
      "target": "scalar",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#is_implemented_by"
    },
    {
      "name": "part_of",
      "target": "https://doi.org/21.T11969/1f6b19e70cfe59ad3f76",
      "property_uri": "http://purl.obolibrary.org/obo/BFO_0000050"
    }
  ]
}
)";

constexpr std::string_view kSoftwareLibrary = R"({
  "pid": "https://doi.org/21.T11969/1f6b19e70cfe59ad3f76",
  "constructor_name": "software_library",
  "label": "Software library",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "version_info",
      "target": "scalar",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#version_info"
    },
    {
      "name": "part_of",
      "target": "https://doi.org/21.T11969/2a7c20f81d0f6abe4087",
      "property_uri": "http://purl.obolibrary.org/obo/BFO_0000050"
    }
  ]
}
)";

constexpr std::string_view kSoftware = R"({
  "pid": "https://doi.org/21.T11969/2a7c20f81d0f6abe4087",
  "constructor_name": "software",
  "label": "Software",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "version_info",
      "target": "scalar",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#version_info"
    }
  ]
}
)";

constexpr std::string_view kComponent = R"({
  "pid": "https://doi.org/21.T11969/3b8d310920107bcf5198",
  "constructor_name": "component",
  "label": "Component",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    }
  ]
}
)";

constexpr std::string_view kDataItem = R"({
  "pid": "https://doi.org/21.T11969/4c9e421a31218cd06209",
  "constructor_name": "data_item",
  "label": "Data item",
  "fields": [
    {
      "name": "label",
      "target": "scalar",
      "property_uri": "http://www.w3.org/2000/01/rdf-schema#label"
    },
    {
      "name": "source_url",
      "target": "uri",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#source_url"
    },
    {
      "name": "source_table",
      "target": "table",
      "property_uri": "https://doi.org/21.T11969/feeb33ad3e4440682a4d#source_table"
    }
  ]
}
)";

constexpr std::string_view kTable = R"({
  "pid": "https://doi.org/21.T11969/5daf532b42329de1731a",
  "constructor_name": "table",
  "label": "Table",
  "fields": []
}
)";

constexpr std::array<BundledDocument, 12> kDocuments = {{
    {"3a1c64f2b7d9045e8a21", "algorithm_evaluation", kAlgorithmEvaluation},
    {"5b2d75a3c8ea156f9b32", "multilevel_analysis", kMultilevelAnalysis},
    {"b9335ce2c99ed87735a6", "group_comparison", kGroupComparison},
    {"7c3e86b4d9fb267a0c43", "class_discovery", kClassDiscovery},
    {"9d4f97c5eadc378b1d54", "class_prediction", kClassPrediction},
    {"feeb33ad3e4440682a4d", "data_analysis", kDataAnalysis},
    {"0e5a08d6fbed489c2e65", "software_method", kSoftwareMethod},
    {"1f6b19e70cfe59ad3f76", "software_library", kSoftwareLibrary},
    {"2a7c20f81d0f6abe4087", "software", kSoftware},
    {"3b8d310920107bcf5198", "component", kComponent},
    {"4c9e421a31218cd06209", "data_item", kDataItem},
    {"5daf532b42329de1731a", "table", kTable},
}};

constexpr std::array<std::string_view, 6> kAnalysisConstructors = {
    "algorithm_evaluation", "multilevel_analysis", "group_comparison",
    "class_discovery",      "class_prediction",    "data_analysis",
};

}  // namespace

std::span<const BundledDocument> documents() { return kDocuments; }

const BundledDocument* find_by_suffix(std::string_view suffix) {
  const auto it = std::find_if(kDocuments.begin(), kDocuments.end(),
                               [&](const BundledDocument& d) { return d.suffix == suffix; });
  return it == kDocuments.end() ? nullptr : &*it;
}

const BundledDocument* find_by_constructor(std::string_view constructor) {
  const auto it =
      std::find_if(kDocuments.begin(), kDocuments.end(),
                   [&](const BundledDocument& d) { return d.constructor_name == constructor; });
  return it == kDocuments.end() ? nullptr : &*it;
}

SchemaId id_of(const BundledDocument& doc) {
  return SchemaId{Registry::Epic, "21.T11969", std::string(doc.suffix)};
}

std::span<const std::string_view> analysis_constructors() { return kAnalysisConstructors; }

void export_to_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    raise(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());
  }
  for (const BundledDocument& doc : kDocuments) {
    const std::filesystem::path path = dir / (std::string(doc.suffix) + ".json");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      raise(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
    }
    out << doc.text;
    if (!out.flush()) {
      raise(ErrorCode::IoError, "failed writing " + path.string());
    }
  }
}

}  // namespace dtforge::bundled

#include "dtforge/identifier.hpp"

#include <algorithm>
#include <cctype>

#include "dtforge/error.hpp"

namespace dtforge {

namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

}  // namespace

const char* to_string(Registry registry) noexcept {
  switch (registry) {
    case Registry::Epic: return "epic";
    case Registry::Orkg: return "orkg";
  }
  return "unknown";
}

const RoutingTable& RoutingTable::built_in() {
  static const RoutingTable table{{
      {"doi.org", Registry::Epic},
      {"hdl.handle.net", Registry::Epic},
      {"orkg.org", Registry::Orkg},
  }};
  return table;
}

SchemaId parse_schema_identifier(std::string_view url) {
  return parse_schema_identifier(url, RoutingTable::built_in());
}

SchemaId parse_schema_identifier(std::string_view url, const RoutingTable& table) {
  std::string_view rest = trim(url);
  if (rest.empty()) {
    raise(ErrorCode::MalformedIdentifier, "identifier is empty");
  }

  // Fragments and query strings never carry handle structure.
  if (auto pos = rest.find('#'); pos != std::string_view::npos) rest = rest.substr(0, pos);
  if (auto pos = rest.find('?'); pos != std::string_view::npos) rest = rest.substr(0, pos);

  if (auto pos = rest.find("://"); pos != std::string_view::npos) {
    const std::string scheme = lowercase(rest.substr(0, pos));
    if (scheme != "http" && scheme != "https") {
      raise(ErrorCode::MalformedIdentifier,
            "unsupported scheme '" + scheme + "' in '" + std::string(trim(url)) + "'");
    }
    rest = rest.substr(pos + 3);
  }

  const auto slash = rest.find('/');
  std::string host = lowercase(slash == std::string_view::npos ? rest : rest.substr(0, slash));
  std::string_view path = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash + 1);
  if (auto colon = host.find(':'); colon != std::string::npos) host.resize(colon);
  if (host.starts_with("www.")) host.erase(0, 4);
  if (host.empty()) {
    raise(ErrorCode::MalformedIdentifier, "no host in '" + std::string(trim(url)) + "'");
  }

  while (path.ends_with('/')) path.remove_suffix(1);

  const auto entry = std::find_if(table.hosts.begin(), table.hosts.end(),
                                  [&](const auto& e) { return e.first == host; });
  if (entry == table.hosts.end()) {
    raise(ErrorCode::UnknownRegistry, "host '" + host + "' does not route to a known registry");
  }

  SchemaId id;
  id.registry = entry->second;
  switch (id.registry) {
    case Registry::Epic: {
      const auto split = path.find('/');
      if (split == std::string_view::npos || split == 0 || split + 1 == path.size()) {
        raise(ErrorCode::MalformedIdentifier,
              "'" + std::string(path) + "' is not a <prefix>/<suffix> handle");
      }
      id.prefix = std::string(path.substr(0, split));
      id.suffix = std::string(path.substr(split + 1));
      break;
    }
    case Registry::Orkg: {
      const auto split = path.find('/');
      if (split == std::string_view::npos || path.substr(0, split) != "template" ||
          split + 1 == path.size()) {
        raise(ErrorCode::MalformedIdentifier,
              "'" + std::string(path) + "' is not a template/<id> path");
      }
      id.prefix.clear();
      id.suffix = std::string(path.substr(split + 1));
      break;
    }
  }
  return id;
}

std::string canonicalize(const SchemaId& id) {
  switch (id.registry) {
    case Registry::Epic: return "https://doi.org/" + id.prefix + "/" + id.suffix;
    case Registry::Orkg: return "https://orkg.org/template/" + id.suffix;
  }
  raise(ErrorCode::MalformedIdentifier, "schema id has no registry");
}

}  // namespace dtforge

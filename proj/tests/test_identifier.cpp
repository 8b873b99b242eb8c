#include <doctest.h>

#include <functional>
#include <string>

#include "dtforge/error.hpp"
#include "dtforge/identifier.hpp"

using namespace dtforge;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("registered handle urls parse to epic ids") {
  const SchemaId gc = parse_schema_identifier("https://doi.org/21.T11969/b9335ce2c99ed87735a6");
  CHECK(gc.registry == Registry::Epic);
  CHECK(gc.prefix == "21.T11969");
  CHECK(gc.suffix == "b9335ce2c99ed87735a6");

  const SchemaId da = parse_schema_identifier("https://doi.org/21.T11969/feeb33ad3e4440682a4d");
  CHECK(da.registry == Registry::Epic);
  CHECK(da.prefix == "21.T11969");
  CHECK(da.suffix == "feeb33ad3e4440682a4d");
}

TEST_CASE("host, scheme, and decoration tolerance") {
  const SchemaId base = parse_schema_identifier("https://doi.org/21.T11969/abc");
  CHECK(parse_schema_identifier("http://doi.org/21.T11969/abc") == base);
  CHECK(parse_schema_identifier("HTTPS://DOI.ORG/21.T11969/abc") == base);
  CHECK(parse_schema_identifier("doi.org/21.T11969/abc") == base);
  CHECK(parse_schema_identifier("https://www.doi.org/21.T11969/abc") == base);
  CHECK(parse_schema_identifier("https://doi.org:443/21.T11969/abc") == base);
  CHECK(parse_schema_identifier("https://doi.org/21.T11969/abc/") == base);
  CHECK(parse_schema_identifier("  https://doi.org/21.T11969/abc \n") == base);
  CHECK(parse_schema_identifier("https://doi.org/21.T11969/abc?x=1") == base);
  CHECK(parse_schema_identifier("https://doi.org/21.T11969/abc#frag") == base);

  const SchemaId via_hdl = parse_schema_identifier("https://hdl.handle.net/21.T11969/abc");
  CHECK(via_hdl == base);
}

TEST_CASE("prefix stays case sensitive") {
  const SchemaId upper = parse_schema_identifier("https://doi.org/21.T11969/abc");
  const SchemaId lower = parse_schema_identifier("https://doi.org/21.t11969/abc");
  CHECK(upper.prefix != lower.prefix);
}

TEST_CASE("epic suffixes may contain slashes") {
  const SchemaId id = parse_schema_identifier("https://doi.org/10.1234/zenodo/record-7");
  CHECK(id.prefix == "10.1234");
  CHECK(id.suffix == "zenodo/record-7");
  CHECK(canonicalize(id) == "https://doi.org/10.1234/zenodo/record-7");
}

TEST_CASE("orkg template urls parse with empty prefix") {
  const SchemaId id = parse_schema_identifier("https://orkg.org/template/R12345");
  CHECK(id.registry == Registry::Orkg);
  CHECK(id.prefix.empty());
  CHECK(id.suffix == "R12345");
  CHECK(canonicalize(id) == "https://orkg.org/template/R12345");
}

TEST_CASE("canonical forms round-trip") {
  const char* urls[] = {
      "https://doi.org/21.T11969/b9335ce2c99ed87735a6",
      "https://doi.org/21.T11969/feeb33ad3e4440682a4d",
      "https://hdl.handle.net/21.T11969/5daf532b42329de1731a",
      "https://orkg.org/template/R199091",
  };
  for (const char* url : urls) {
    const SchemaId parsed = parse_schema_identifier(url);
    const std::string canonical = canonicalize(parsed);
    CHECK(parse_schema_identifier(canonical) == parsed);
    CHECK(canonicalize(parse_schema_identifier(canonical)) == canonical);
  }
}

TEST_CASE("malformed identifiers are typed errors") {
  CHECK(code_of([] { parse_schema_identifier(""); }) == ErrorCode::MalformedIdentifier);
  CHECK(code_of([] { parse_schema_identifier("   "); }) == ErrorCode::MalformedIdentifier);
  CHECK(code_of([] { parse_schema_identifier("ftp://doi.org/21.T11969/abc"); }) ==
        ErrorCode::MalformedIdentifier);
  // handle structure missing a suffix
  CHECK(code_of([] { parse_schema_identifier("https://doi.org/21.T11969"); }) ==
        ErrorCode::MalformedIdentifier);
  CHECK(code_of([] { parse_schema_identifier("https://doi.org/"); }) ==
        ErrorCode::MalformedIdentifier);
  // orkg urls must use the template path
  CHECK(code_of([] { parse_schema_identifier("https://orkg.org/resource/R1"); }) ==
        ErrorCode::MalformedIdentifier);
  CHECK(code_of([] { parse_schema_identifier("https://orkg.org/template/"); }) ==
        ErrorCode::MalformedIdentifier);
}

TEST_CASE("unrecognized hosts are routing errors") {
  CHECK(code_of([] { parse_schema_identifier("https://example.com/foo"); }) ==
        ErrorCode::UnknownRegistry);
  CHECK(code_of([] { parse_schema_identifier("https://doii.org/21.T11969/abc"); }) ==
        ErrorCode::UnknownRegistry);
}

TEST_CASE("custom routing tables extend host recognition") {
  RoutingTable table = RoutingTable::built_in();
  table.hosts.emplace_back("types.example.org", Registry::Epic);
  const SchemaId id =
      parse_schema_identifier("https://types.example.org/21.X/custom", table);
  CHECK(id.registry == Registry::Epic);
  CHECK(id.prefix == "21.X");
  CHECK(id.suffix == "custom");
}

TEST_CASE("error text names the offending input") {
  try {
    parse_schema_identifier("https://example.com/foo");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("example.com") != std::string::npos);
    CHECK(std::string(e.what()).find("unknown-registry") != std::string::npos);
  }
}

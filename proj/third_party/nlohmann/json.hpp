// Forwarding header so sources can use the upstream include path while the
// single-header copy lives flat in vendor/.
#pragma once
#include <json.hpp>

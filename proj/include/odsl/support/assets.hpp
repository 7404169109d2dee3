#pragma once

namespace odsl::assets {

// Built-in copies of the data files under data/, embedded at build time.
const char* default_registry();
const char* arm_defaults();

}  // namespace odsl::assets

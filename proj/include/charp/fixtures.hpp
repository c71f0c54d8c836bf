#pragma once

#include <string>
#include <vector>

namespace charp {

// A bundled scenario, embedded so the binary can run them from anywhere.
// The same texts ship as files under fixtures/.
struct Fixture {
    std::string name;
    std::string text;
};

const std::vector<Fixture>& bundled_fixtures();

// nullptr when no fixture has that name.
const Fixture* find_fixture(const std::string& name);

} // namespace charp

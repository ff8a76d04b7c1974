#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace cremona {

/// One worked example with a known value, checked by rendering the computed
/// result and comparing strings. The expected string can be overridden from
/// a fixtures file, so a corrupted file makes the run fail loudly.
struct Fixture {
    std::string name;
    std::string summary;
    std::string expected;
    std::string annotation;  // printed with the fixture when non-empty
    std::function<std::string()> compute;
};

const std::vector<Fixture>& paper_fixtures();

struct FixtureOutcome {
    const Fixture* fixture{nullptr};
    std::string expected;  // after overrides
    std::string actual;
    bool pass{false};
};

std::vector<FixtureOutcome> run_fixtures(
    const std::map<std::string, std::string>& expected_overrides = {});

}  // namespace cremona

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace buffon {

// Requested configuration lies outside the model (e.g. triangle side != grid spacing).
class UnsupportedConfiguration : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A sample that admits no estimate, such as zero crossings or zero needle hits.
class DegenerateSample : public std::runtime_error {
public:
    explicit DegenerateSample(const std::string& what,
                              std::optional<std::uint64_t> run_index = std::nullopt)
        : std::runtime_error(what), run_index_(run_index) {}

    std::optional<std::uint64_t> run_index() const { return run_index_; }

private:
    std::optional<std::uint64_t> run_index_;
};

} // namespace buffon

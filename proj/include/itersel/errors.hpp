#pragma once

#include <stdexcept>
#include <string>

namespace itersel {

// Bad flags, bad templates, bad config files. CLI maps these to exit 1.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unusable input data (unreadable file, zero accepted records, ...).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A single sample could not be scored (empty continuation, transport
// failure, token alignment). Callers flag the sample and move on.
struct scoring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Corrupt or inconsistent persisted run state.
struct state_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace itersel

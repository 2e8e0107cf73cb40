#pragma once

#include <stdexcept>
#include <string>

namespace scalecast {

// Invalid or degenerate input data: malformed CSV, inverted bounds,
// empty datasets, constant feature columns, missing plan inputs.
// The CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Model-layer failure: invalid hyperparameters, a parameter block that
// does not match the model kind, out-of-domain predict inputs, or a
// malformed serialized model. The CLI maps this to exit code 3.
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scalecast

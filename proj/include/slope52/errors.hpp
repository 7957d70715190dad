#pragma once

#include <stdexcept>
#include <string>

namespace slope52 {

struct NonPositiveParameter : std::domain_error {
    explicit NonPositiveParameter(const std::string& what) : std::domain_error(what) {}
};

struct NonUnimodular : std::domain_error {
    explicit NonUnimodular(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateAlpha : std::runtime_error {
    explicit DegenerateAlpha(const std::string& what) : std::runtime_error(what) {}
};

struct DiskBoundaryOverflow : std::runtime_error {
    explicit DiskBoundaryOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct SlopeOutOfRange : std::domain_error {
    explicit SlopeOutOfRange(const std::string& what) : std::domain_error(what) {}
};

struct BracketNotFound : std::runtime_error {
    explicit BracketNotFound(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooSmall : std::invalid_argument {
    explicit GridTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace slope52

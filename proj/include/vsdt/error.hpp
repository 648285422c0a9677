#pragma once

#include <stdexcept>
#include <string>

namespace vsdt {

enum class errc {
    invalid_input,
    incomplete_coloring,
    bad_vertex,
    precondition_violated,
    isolated_edge,
    no_safe_color,
    extension_failure,
    not_a_forest,
    not_a_tree,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_input: return "InvalidInput";
    case errc::incomplete_coloring: return "IncompleteColoring";
    case errc::bad_vertex: return "BadVertex";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::isolated_edge: return "IsolatedEdge";
    case errc::no_safe_color: return "NoSafeColor";
    case errc::extension_failure: return "ExtensionFailure";
    case errc::not_a_forest: return "NotAForest";
    case errc::not_a_tree: return "NotATree";
    case errc::io_error: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace vsdt

#pragma once

#include <string>

namespace bridgelab {

/// Line-oriented child process: write one line, read one line back.
/// Used for external membership predicates (graph6 in, Y/N out).
class LineSubprocess {
public:
    explicit LineSubprocess(const std::string& command);
    ~LineSubprocess();

    LineSubprocess(const LineSubprocess&) = delete;
    LineSubprocess& operator=(const LineSubprocess&) = delete;

    std::string ask(const std::string& line);

private:
    int in_fd_ = -1;   // child's stdin (we write)
    int out_fd_ = -1;  // child's stdout (we read)
    long pid_ = -1;
    std::string buffer_;
};

}  // namespace bridgelab

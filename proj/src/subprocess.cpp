#include "bridgelab/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <stdexcept>

namespace bridgelab {

LineSubprocess::LineSubprocess(const std::string& command) {
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
        throw std::runtime_error("pipe failed: " + std::string(strerror(errno)));
    pid_t pid = fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
        dup2(to_child[0], STDIN_FILENO);
        dup2(from_child[1], STDOUT_FILENO);
        close(to_child[0]);
        close(to_child[1]);
        close(from_child[0]);
        close(from_child[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    in_fd_ = to_child[1];
    out_fd_ = from_child[0];
    pid_ = pid;
}

LineSubprocess::~LineSubprocess() {
    if (in_fd_ >= 0) close(in_fd_);
    if (out_fd_ >= 0) close(out_fd_);
    if (pid_ > 0) waitpid(static_cast<pid_t>(pid_), nullptr, 0);
}

std::string LineSubprocess::ask(const std::string& line) {
    std::string msg = line + "\n";
    size_t off = 0;
    while (off < msg.size()) {
        ssize_t w = write(in_fd_, msg.data() + off, msg.size() - off);
        if (w < 0) {
            if (errno == EINTR) continue;
            throw std::runtime_error("external predicate closed its input");
        }
        off += static_cast<size_t>(w);
    }
    for (;;) {
        auto nl = buffer_.find('\n');
        if (nl != std::string::npos) {
            std::string reply = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            if (!reply.empty() && reply.back() == '\r') reply.pop_back();
            return reply;
        }
        char chunk[256];
        ssize_t r = read(out_fd_, chunk, sizeof chunk);
        if (r < 0) {
            if (errno == EINTR) continue;
            throw std::runtime_error("read from external predicate failed");
        }
        if (r == 0) throw std::runtime_error("external predicate exited without replying");
        buffer_.append(chunk, static_cast<size_t>(r));
    }
}

}  // namespace bridgelab

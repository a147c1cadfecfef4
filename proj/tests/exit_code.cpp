// Runs a command and succeeds iff it exits with the expected status.
// usage: exit_code <status> <program> [args...]

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: exit_code <status> <program> [args...]\n");
    return 2;
  }
  const int expected = std::atoi(argv[1]);
  const pid_t pid = fork();
  if (pid == 0) {
    execv(argv[2], argv + 2);
    _exit(127);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  const int got = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (got != expected) {
    std::fprintf(stderr, "expected exit status %d, got %d\n", expected, got);
    return 1;
  }
  return 0;
}

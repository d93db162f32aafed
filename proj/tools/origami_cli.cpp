// Command line front end. Subcommands land here as the library modules come up.
#include <cstdio>

int main() {
  std::puts("origami: no subcommands wired yet");
  return 2;
}

#include <cstdio>

int main() {
  std::puts("smallcut: command-line interface not wired up yet");
  return 64;
}

#include <cstdio>

int main() {
  std::puts("ductwave: pipeline not wired yet");
  return 0;
}

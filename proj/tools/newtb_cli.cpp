// Copyright 2026 The newtb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Thin command-line front end over the shared library's C interface.

#include <stdio.h>

#include "newtb.h"

int main(int argc, char** argv) {
  char* out = nullptr;
  nb_status status = nb_run_command(argc - 1, argv + 1, &out);
  if (out) {
    fputs(out, status == NB_OK ? stdout : stderr);
    nb_string_free(out);
  } else if (status != NB_OK) {
    fprintf(stderr, "error: %s\n", nb_last_error());
  }
  return static_cast<int>(status) == 4 ? 2 : static_cast<int>(status);
}

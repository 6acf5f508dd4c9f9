// Copyright 2026 The ffiwa authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
int main(){ return 0; }

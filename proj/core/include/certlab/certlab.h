// Copyright 2026 The certlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Convenience header that pulls in the whole library.

#ifndef CERTLAB_CERTLAB_H_
#define CERTLAB_CERTLAB_H_

#include "certlab/boolfn.h"
#include "certlab/device.h"
#include "certlab/entropy.h"
#include "certlab/error.h"
#include "certlab/fouriersample.h"
#include "certlab/llqsv.h"
#include "certlab/parallel.h"
#include "certlab/protocol.h"
#include "certlab/rejection.h"
#include "certlab/rng.h"
#include "certlab/sqforrelation.h"
#include "certlab/stats.h"

#endif  // CERTLAB_CERTLAB_H_

// Copyright 2026 The msa2gloss Authors
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

#ifndef MSA2GLOSS_MSA2GLOSS_HPP
#define MSA2GLOSS_MSA2GLOSS_HPP

#include "msa2gloss/arabic_text.hpp"
#include "msa2gloss/error.hpp"
#include "msa2gloss/features.hpp"
#include "msa2gloss/gloss.hpp"
#include "msa2gloss/morphology.hpp"
#include "msa2gloss/pipeline.hpp"
#include "msa2gloss/utf8.hpp"

#endif  // MSA2GLOSS_MSA2GLOSS_HPP

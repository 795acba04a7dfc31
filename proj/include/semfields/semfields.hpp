// Copyright 2026 The Semfields Authors.
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
#pragma once

#include "semfields/analysis.hpp"
#include "semfields/collocations.hpp"
#include "semfields/dataset.hpp"
#include "semfields/error.hpp"
#include "semfields/harness.hpp"
#include "semfields/io.hpp"
#include "semfields/lemmatizer.hpp"
#include "semfields/locator.hpp"
#include "semfields/logreg.hpp"
#include "semfields/metrics.hpp"
#include "semfields/model.hpp"
#include "semfields/random.hpp"
#include "semfields/strings.hpp"
#include "semfields/svm.hpp"
#include "semfields/tagger.hpp"
#include "semfields/textprep.hpp"
#include "semfields/thesaurus.hpp"
#include "semfields/tokenizer.hpp"
#include "semfields/vectorizer.hpp"

# Copyright 2026 The drelkit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Implicit discourse relation classification from precomputed sentence embeddings."""

from ._drelkit import (  # noqa: F401
    CoverageError,
    DataError,
    DiscourseRelation,
    EmbeddingStore,
    Error,
    MlpClassifier,
    NumericError,
    ParseError,
    SenseTop,
    always_positive_baseline,
    assign_split,
    bce_loss,
    cli,
    compose,
    coverage_missing,
    f1,
    format_mean_std,
    macro_average,
    mann_whitney_u,
    parse_jsonl,
    read_embedding_file,
    run_experiment,
    select_implicit,
    sense_histogram,
    top_sense,
    write_embedding_file,
    write_jsonl,
)

__version__ = "0.1.0"

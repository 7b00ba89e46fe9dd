// Copyright 2026 The tricount Authors.
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

/* C interface to the tricount library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a tc_status; on
 * failure tc_last_error() describes the most recent error on the calling
 * thread. Strings returned through char** are heap allocated and must be
 * released with tc_string_free().
 */
#ifndef TRICOUNT_TRICOUNT_H_
#define TRICOUNT_TRICOUNT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(TRICOUNT_BUILDING_LIBRARY)
#define TC_API __attribute__((visibility("default")))
#else
#define TC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1,
  TC_ERR_PARSE = 2,
  TC_ERR_IO = 3,
  TC_ERR_OUT_OF_RANGE = 4,
  TC_ERR_BUDGET_EXHAUSTED = 5,
  TC_ERR_INVARIANT = 6,
  TC_ERR_INTERNAL = 7
} tc_status;

typedef enum tc_profile {
  TC_PROFILE_THEORETICAL = 0,
  TC_PROFILE_PRACTICAL = 1
} tc_profile;

typedef struct tc_graph tc_graph;
typedef struct tc_oracle tc_oracle;

TC_API const char* tc_version(void);
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);

/* Graphs. */
TC_API tc_status tc_graph_parse(const char* text, size_t len, int remap_ids,
                                tc_graph** out);
TC_API tc_status tc_graph_load_file(const char* path, int remap_ids,
                                    tc_graph** out);
TC_API tc_status tc_graph_write_file(const tc_graph* g, const char* path);
TC_API void tc_graph_free(tc_graph* g);
TC_API uint64_t tc_graph_num_vertices(const tc_graph* g);
TC_API uint64_t tc_graph_num_edges(const tc_graph* g);
TC_API tc_status tc_graph_degree(const tc_graph* g, uint32_t v,
                                 uint32_t* out);
/* i is 1-based; *absent is set to 1 when i exceeds the degree. */
TC_API tc_status tc_graph_neighbor(const tc_graph* g, uint32_t v, uint64_t i,
                                   uint32_t* out, int* absent);
TC_API tc_status tc_graph_has_edge(const tc_graph* g, uint32_t u, uint32_t v,
                                   int* out);
/* JSON array of original ids when the graph was loaded with remap_ids. */
TC_API tc_status tc_graph_remap_json(const tc_graph* g, char** out_json);

/* Exact counting. */
TC_API tc_status tc_exact_count(const tc_graph* g, uint64_t* out_t);
/* {t, t_v, t_e}; identities are verified before returning. */
TC_API tc_status tc_exact_stats_json(const tc_graph* g, char** out_json);

/* Query oracle. budget < 0 means uncapped. */
TC_API tc_status tc_oracle_new(const tc_graph* g, int64_t budget,
                               tc_oracle** out);
TC_API void tc_oracle_free(tc_oracle* o);
TC_API tc_status tc_oracle_degree(tc_oracle* o, uint32_t v, uint32_t* out);
TC_API tc_status tc_oracle_neighbor(tc_oracle* o, uint32_t v, uint64_t i,
                                    uint32_t* out, int* absent);
TC_API tc_status tc_oracle_pair(tc_oracle* o, uint32_t u, uint32_t v,
                                int* out);
/* {degree, neighbor, pair, vertex_samples, total} */
TC_API tc_status tc_oracle_stats_json(const tc_oracle* o, char** out_json);

/* Instance generators. */
typedef struct tc_gen_spec {
  const char* family; /* clique, g1-bipartite, g2-matching, ... */
  uint64_t n;         /* 0: smallest that fits */
  uint64_t side;
  uint64_t t;
  uint64_t r;
  uint64_t k;
  double p;
  uint64_t seed;
  int shuffle;
} tc_gen_spec;

TC_API void tc_gen_spec_init(tc_gen_spec* spec);
TC_API tc_status tc_generate(const tc_gen_spec* spec, tc_graph** out_graph,
                             char** out_sidecar_json);
/* Same as tc_generate with the spec given as a JSON object. */
TC_API tc_status tc_generate_json(const char* spec_json, tc_graph** out_graph,
                                  char** out_sidecar_json);

/* Estimation. */
typedef struct tc_estimate_options {
  double epsilon;
  uint64_t seed;
  tc_profile profile;
  int64_t budget; /* < 0: 2 * m_bar */
  int include_timing;
} tc_estimate_options;

TC_API void tc_estimate_options_init(tc_estimate_options* options);
TC_API tc_status tc_estimate(const tc_graph* g,
                             const tc_estimate_options* options,
                             double* out_estimate, char** out_report_json);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* TRICOUNT_TRICOUNT_H_ */

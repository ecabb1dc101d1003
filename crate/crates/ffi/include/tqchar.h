#ifndef TQCHAR_H
#define TQCHAR_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TqStatus {
  TQ_STATUS_OK = 0,
  TQ_STATUS_NULL_POINTER = 1,
  TQ_STATUS_INVALID_UTF8 = 2,
  // Malformed or out-of-range input.
  TQ_STATUS_INVALID_INPUT = 3,
  // A consistency check, resource limit or cache failure.
  TQ_STATUS_INTERNAL = 4,
  TQ_STATUS_PANIC = 5,
} TqStatus;

// A character with coefficients in `Z[t, t^-1]`.
typedef struct TqCharacter TqCharacter;

// Computation context for one Dynkin diagram.
typedef struct TqEngine TqEngine;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread; empty after a
// success. Valid until the next call into the library on this thread.
const char *tq_last_error(void);

// Creates an engine for a diagram such as `"D4"`. `cache_dir` may be null
// for an in-memory cache only.
//
// # Safety
// `diagram` and a non-null `cache_dir` must be NUL terminated strings and
// `out` a valid pointer.
enum TqStatus tq_engine_new(const char *diagram, const char *cache_dir, struct TqEngine **out);

// Sets the cap on monomials created by a single computation.
//
// # Safety
// `engine` must come from [`tq_engine_new`].
enum TqStatus tq_engine_set_max_monomials(struct TqEngine *engine, uintptr_t limit);

// # Safety
// `engine` must come from [`tq_engine_new`] or be null.
void tq_engine_free(struct TqEngine *engine);

// Character of the l-fundamental module at `node` and point `eps^step`.
//
// # Safety
// `engine` must be live and `out` valid.
enum TqStatus tq_fundamental(const struct TqEngine *engine,
                             uint32_t node,
                             int32_t step,
                             struct TqCharacter **out);

// Character of the standard module with Drinfeld polynomial `spec`, given
// as text (`"2:1^2 1:0"`) or as a JSON list of `{node, orbit, step, mult}`.
//
// # Safety
// `engine` must be live, `spec` NUL terminated and `out` valid.
enum TqStatus tq_standard(const struct TqEngine *engine,
                          const char *spec,
                          struct TqCharacter **out);

// Number of monomials, or 0 for a null handle.
//
// # Safety
// `chi` must be live or null.
uintptr_t tq_character_len(const struct TqCharacter *chi);

// # Safety
// `chi` must be live and `out` valid.
enum TqStatus tq_character_to_json(const struct TqCharacter *chi, char **out);

// # Safety
// `chi` must be live and `out` valid.
enum TqStatus tq_character_to_text(const struct TqCharacter *chi, char **out);

// # Safety
// `chi` must be live and `out` valid.
enum TqStatus tq_character_to_dot(const struct TqCharacter *chi, char **out);

// # Safety
// `chi` must come from this library or be null.
void tq_character_free(struct TqCharacter *chi);

// # Safety
// `s` must come from this library or be null.
void tq_string_free(char *s);

// `[M_P : L_Q]` for Drinfeld polynomials `p` and `q`.
//
// # Safety
// `engine` must be live, the strings NUL terminated and `out` valid.
enum TqStatus tq_multiplicity(const struct TqEngine *engine,
                              const char *p,
                              const char *q,
                              int64_t *out);

// Branching of the restriction of the canonical standard module of `weight`
// (`"0,1,0,0"`), as a JSON list of `{weight, z, c}`. `orientation` such as
// `"1>2,2>3"` may be null for the default.
//
// # Safety
// `engine` must be live, the strings NUL terminated or null where allowed,
// and `out` valid.
enum TqStatus tq_branching_json(const struct TqEngine *engine,
                                const char *weight,
                                const char *orientation,
                                char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TQCHAR_H */

#ifndef CHIPLET_COST_H
#define CHIPLET_COST_H

/* Generated by cbindgen from chiplet-cost-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>
typedef struct ChipcostCatalog ChipcostCatalog;

// Status codes returned by every FFI entry point.
typedef enum ChipcostStatus {
  CHIPCOST_STATUS_OK = 0,
  // A required pointer argument was null.
  CHIPCOST_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  CHIPCOST_STATUS_INVALID_UTF8 = 2,
  // A document failed to parse or violated an invariant.
  CHIPCOST_STATUS_PARSE_ERROR = 3,
  // A name did not resolve against the catalog or spec.
  CHIPCOST_STATUS_UNKNOWN_REFERENCE = 4,
  // The model rejected the inputs (domain error).
  CHIPCOST_STATUS_COMPUTE_ERROR = 5,
  // An exact integer result exceeded the output type.
  CHIPCOST_STATUS_OVERFLOW = 6,
} ChipcostStatus;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static string; never freed by the caller.
const char *chipcost_version(void);

// Message describing the most recent failure on this thread. The pointer
// stays valid until the next failing call on the same thread.
const char *chipcost_last_error_message(void);

// Create a handle to the built-in default catalog.
//
// # Safety
// `out` must be a valid pointer to a catalog-handle slot.
enum ChipcostStatus chipcost_catalog_default(ChipcostCatalog **out);

// Load a catalog from a JSON document.
//
// # Safety
// `json` must be a valid NUL-terminated C string; `out` a valid slot.
enum ChipcostStatus chipcost_catalog_from_json(const char *json, ChipcostCatalog **out);

// Release a catalog handle. Null is a no-op.
//
// # Safety
// `catalog` must be null or a pointer obtained from a catalog constructor,
// not freed before.
void chipcost_catalog_free(ChipcostCatalog *catalog);

// Die yield of an `area_mm2` die on the named node.
//
// # Safety
// `catalog` must be a live handle; `node` a C string; `out` a valid slot.
enum ChipcostStatus chipcost_die_yield(const ChipcostCatalog *catalog,
                                       const char *node,
                                       double area_mm2,
                                       double *out);

// Whole dies per wafer for an `area_mm2` die on the named node.
//
// # Safety
// Same contract as [`chipcost_die_yield`].
enum ChipcostStatus chipcost_dies_per_wafer(const ChipcostCatalog *catalog,
                                            const char *node,
                                            double area_mm2,
                                            double aspect_ratio,
                                            uint64_t *out);

// Number of distinct systems from `kinds` chiplet kinds and `sockets`
// package sockets (multisets of sizes 1..=sockets). Returns `Overflow` when
// the exact count does not fit in 64 bits.
//
// # Safety
// `out` must be a valid slot.
enum ChipcostStatus chipcost_fsmc_count(uint64_t kinds, uint64_t sockets, uint64_t *out);

// Cost every system of a spec document (one shared production group) and
// return the analysis as a JSON string: per-system breakdowns, the NRE
// ledger and scenario aggregates.
//
// # Safety
// `catalog` must be a live handle, `spec_json` a C string, `out_json` a
// valid slot. The returned string is freed with [`chipcost_string_free`].
enum ChipcostStatus chipcost_analyze_json(const ChipcostCatalog *catalog,
                                          const char *spec_json,
                                          char **out_json);

// Free a string returned by this library. Null is a no-op.
//
// # Safety
// `s` must be null or a pointer returned by this library, not freed before.
void chipcost_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHIPLET_COST_H */

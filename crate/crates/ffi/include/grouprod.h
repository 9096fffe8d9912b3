#ifndef GROUPROD_H
#define GROUPROD_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum GrpStatus {
  GRP_STATUS_OK = 0,
  GRP_STATUS_NULL_ARGUMENT = 1,
  GRP_STATUS_INVALID_UTF8 = 2,
  GRP_STATUS_PARSE_ERROR = 3,
  GRP_STATUS_VALIDATION_ERROR = 4,
  GRP_STATUS_CAP_EXCEEDED = 5,
  GRP_STATUS_NOT_FOUND = 6,
  GRP_STATUS_FOREIGN_SUBGROUP = 7,
  GRP_STATUS_INTERNAL = 8,
  GRP_STATUS_PANIC = 9,
} GrpStatus;

typedef enum GrpFormation {
  GRP_FORMATION_NILPOTENT = 0,
  GRP_FORMATION_SUPERSOLUBLE = 1,
  GRP_FORMATION_W_SUPERSOLUBLE = 2,
} GrpFormation;

/**
 * A group together with its named subgroups.
 */
typedef struct GrpGroup GrpGroup;

/**
 * A subgroup of one particular group. Holds its own reference to the
 * parent, so it may outlive the group handle it came from.
 */
typedef struct GrpSubgroup GrpSubgroup;

/**
 * Classification of `G = AB`. `mutually_permutable` is 1, 0, or -1 when
 * a factor was too large to decide.
 */
typedef struct GrpProductFlags {
  bool is_product;
  bool a_normal;
  bool trivial_intersection;
  bool b_permutes_sylow_maximals;
  bool sylow_wise_permutes;
  bool weak_normal;
  bool weak_direct;
  int8_t mutually_permutable;
  bool theorem_d_hypothesis;
  bool g_prime_nilpotent;
} GrpProductFlags;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *grp_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *grp_version(void);

/**
 * Parses a group definition document.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` writable.
 */
enum GrpStatus grp_group_parse(const char *text, struct GrpGroup **out);

/**
 * Builds the order-972 example with named subgroups `A`, `B`, `A0` and `Q`.
 *
 * # Safety
 * `out` must be writable.
 */
enum GrpStatus grp_group_example972(struct GrpGroup **out);

/**
 * # Safety
 * `group` must be null or a handle not yet freed.
 */
void grp_group_free(struct GrpGroup *group);

/**
 * # Safety
 * `group` must be a live handle and `out` writable.
 */
enum GrpStatus grp_group_order(const struct GrpGroup *group, size_t *out);

/**
 * # Safety
 * `group` must be a live handle and `out` writable.
 */
enum GrpStatus grp_group_is_supersoluble(const struct GrpGroup *group, bool *out);

/**
 * # Safety
 * `group` must be a live handle and `out` writable.
 */
enum GrpStatus grp_group_is_member(const struct GrpGroup *group,
                                   enum GrpFormation formation,
                                   bool *out);

/**
 * Looks up a named subgroup from the document.
 *
 * # Safety
 * `group` must be a live handle, `name` nul-terminated, `out` writable.
 */
enum GrpStatus grp_group_subgroup(const struct GrpGroup *group,
                                  const char *name,
                                  struct GrpSubgroup **out);

/**
 * Residual of the whole group for `formation`.
 *
 * # Safety
 * `group` must be a live handle and `out` writable.
 */
enum GrpStatus grp_group_residual(const struct GrpGroup *group,
                                  enum GrpFormation formation,
                                  struct GrpSubgroup **out);

/**
 * # Safety
 * `subgroup` must be a live handle and `out` writable.
 */
enum GrpStatus grp_subgroup_order(const struct GrpSubgroup *subgroup, size_t *out);

/**
 * # Safety
 * `subgroup` must be null or a handle not yet freed.
 */
void grp_subgroup_free(struct GrpSubgroup *subgroup);

/**
 * Classifies `G = AB` for two subgroups of the same group.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum GrpStatus grp_classify(const struct GrpSubgroup *a,
                            const struct GrpSubgroup *b,
                            struct GrpProductFlags *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GROUPROD_H */

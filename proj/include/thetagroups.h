/*
 * C interface to the theta-groups library.
 *
 * Every call returns an opaque result handle owning a status code plus
 * either a JSON report or an error message. Status codes mirror the CLI
 * exit contract: 0 success, 1 a verification property failed (a JSON
 * report is still available), 2 malformed input, 3 semantic invariant
 * violation.
 */
#ifndef THETAGROUPS_H
#define THETAGROUPS_H

#ifdef __cplusplus
extern "C" {
#endif

#define TG_OK 0
#define TG_PROPERTY_FAILURE 1
#define TG_PARSE_ERROR 2
#define TG_INVARIANT_VIOLATION 3

typedef struct tg_result tg_result;

/* Mumford normal form, radical and homogeneous index of an alternating
 * pairing document {"group":{"factors":[...]},"matrix":[[...]]}. */
tg_result* tg_classify_pairing(const char* pairing_json);

/* Standard representation report for K given as {"factors":[...]}:
 * dimension, commutator pairing, irreducibility, generator matrices. */
tg_result* tg_heisenberg(const char* group_json);

/* Orbit sizes of Sp_{2r}(F_2) on the weight -2 characters for ranks
 * 1..max_rank, plus sign reports for the dihedral/quaternion blocks and
 * their central products. */
tg_result* tg_selfdual_orbits(int max_rank);

/* Brauer group structure of a model {"g":..,"n":..,"ns":[[[...]]]}; when
 * class_json (a pairing document) is non-NULL the report also carries the
 * class order, cyclic decomposition and projectivization verdict. */
tg_result* tg_brauer(const char* model_json, const char* class_json);

/* Run a verification suite: one of "heisenberg", "orbits", "brauer",
 * "cocycle", "multiplicativity", "all". options_json may be NULL or
 * {"max_k":..,"max_rank":..,"g":..,"n":..,"seed":..}. Status is
 * TG_PROPERTY_FAILURE when a check fails; the JSON report lists every
 * check either way. */
tg_result* tg_verify(const char* suite, const char* options_json);

int tg_result_status(const tg_result* r);
/* JSON text, or NULL when no report was produced. Owned by the result. */
const char* tg_result_json(const tg_result* r);
/* Error message, or NULL on success. Owned by the result. */
const char* tg_result_error(const tg_result* r);
void tg_result_free(tg_result* r);

const char* tg_version(void);

#ifdef __cplusplus
}
#endif

#endif /* THETAGROUPS_H */

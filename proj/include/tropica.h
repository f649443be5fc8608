/* tropica: exact tropical plane geometry, C API.
 *
 * Conventions:
 *   - Every function returns a tropica_status; 0 is success.
 *   - On failure, tropica_last_error() returns a thread-local JSON document
 *     describing the error; it stays valid until the next failing call on
 *     the same thread.
 *   - Strings returned through char** out-parameters are heap-allocated by
 *     the library and must be released with tropica_string_free().
 *   - Handles are opaque; release them with the matching *_free().
 *   - Numbers cross the boundary as exact strings: "p", "p/q" or "-inf"
 *     (decimal literals are accepted on input).
 */
#ifndef TROPICA_H
#define TROPICA_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tropica_status {
  TROPICA_OK = 0,
  TROPICA_ERROR_DOMAIN = 1, /* well-formed input outside an operation's domain */
  TROPICA_ERROR_PARSE = 2,  /* malformed input */
  TROPICA_ERROR_INVALID_ARGUMENT = 3
} tropica_status;

typedef struct tropica_unipoly tropica_unipoly;
typedef struct tropica_bipoly tropica_bipoly;
typedef struct tropica_curve tropica_curve;

const char* tropica_version(void);
const char* tropica_last_error(void); /* NULL when the last call succeeded */
void tropica_string_free(char* s);

/* ---- univariate polynomials -------------------------------------- */

tropica_status tropica_unipoly_parse(const char* json, tropica_unipoly** out);
void tropica_unipoly_free(tropica_unipoly* p);
tropica_status tropica_unipoly_to_json(const tropica_unipoly* p, char** json_out);
tropica_status tropica_unipoly_eval(const tropica_unipoly* p, const char* x,
                                    char** value_out);
tropica_status tropica_unipoly_canonicalize(const tropica_unipoly* p,
                                            tropica_unipoly** out);
tropica_status tropica_unipoly_roots(const tropica_unipoly* p, char** json_out);
tropica_status tropica_unipoly_factor(const tropica_unipoly* p, char** json_out);
/* inverse of factor: {"leading":"...","roots":[...]} -> polynomial */
tropica_status tropica_expand_factors(const char* factorization_json,
                                      tropica_unipoly** out);
/* hyperfield evaluation: {"kind":"singleton"|"closed-ray","value":"..."} */
tropica_status tropica_unipoly_hyper_eval(const tropica_unipoly* p, const char* x,
                                          char** json_out);

/* ---- bivariate polynomials and curves ----------------------------- */

tropica_status tropica_bipoly_parse(const char* json, tropica_bipoly** out);
void tropica_bipoly_free(tropica_bipoly* p);
tropica_status tropica_bipoly_to_json(const tropica_bipoly* p, char** json_out);
tropica_status tropica_bipoly_curve(const tropica_bipoly* p, tropica_curve** out);
tropica_status tropica_bipoly_dual_json(const tropica_bipoly* p, char** json_out);

tropica_status tropica_curve_parse(const char* json, tropica_curve** out);
void tropica_curve_free(tropica_curve* c);
tropica_status tropica_curve_to_json(const tropica_curve* c, char** json_out);
tropica_status tropica_curve_degree(const tropica_curve* c, char** json_out);
/* balancing check on an arbitrary weighted graph in curve JSON */
tropica_status tropica_balance_check(const char* graph_json, char** json_out);
/* reconstruction from a dual subdivision; anchor pins the translation */
tropica_status tropica_curve_from_dual(const char* subdivision_json,
                                       const char* anchor_x, const char* anchor_y,
                                       tropica_curve** out);
/* the hyperfield line graph y in (a+x) (+) b, with its vertical tail */
tropica_status tropica_line_graph_with_tail(const char* a, const char* b,
                                            tropica_curve** out);

/* ---- intersection theory ------------------------------------------ */

tropica_status tropica_union_curve(const tropica_bipoly* p1,
                                   const tropica_bipoly* p2,
                                   tropica_bipoly** product_out,
                                   tropica_curve** curve_out);
tropica_status tropica_intersect_transverse(const tropica_curve* c1,
                                            const tropica_curve* c2,
                                            char** json_out);
tropica_status tropica_intersect_stable(const tropica_curve* c1,
                                        const tropica_curve* c2, char** json_out);
tropica_status tropica_bezout(const tropica_bipoly* p1, const tropica_bipoly* p2,
                              char** json_out);

/* ---- patchworking -------------------------------------------------- */

tropica_status tropica_patchwork_validate(const tropica_curve* c,
                                          const char* survivors_json,
                                          char** json_out);
/* limit < 0 enumerates everything */
tropica_status tropica_patchwork_enumerate(const tropica_curve* c, long limit,
                                           char** json_out);
tropica_status tropica_patchwork_stats(const tropica_curve* c,
                                       const char* survivors_json, char** json_out);

/* ---- amoebas and dequantisation ------------------------------------ */

tropica_status tropica_amoeba_sample(const char* family_json, const char* t,
                                     const char* grid_json, char** json_out);
/* request: {"family": {...}, "t_values": ["2","8"], "grid": {...}} */
tropica_status tropica_amoeba_converge(const char* request_json, char** json_out);
tropica_status tropica_dequant_add(const char* x, const char* y, const char* t,
                                   int precision, char** json_out);

/* ---- SVG rendering -------------------------------------------------- */
/* render_json: {"viewport":[x0,y0,x1,y1]?, "pad_fraction":0.2?, "labels":true?}
 * (pass NULL or "{}" for defaults) */

tropica_status tropica_svg_curve(const tropica_curve* c, const char* render_json,
                                 char** svg_out);
tropica_status tropica_svg_dual(const tropica_bipoly* p, const char* render_json,
                                char** svg_out);
tropica_status tropica_svg_patchwork(const tropica_curve* c,
                                     const char* survivors_json,
                                     const char* render_json, char** svg_out);
tropica_status tropica_svg_amoeba(const char* sample_json,
                                  const char* family_json,
                                  const char* render_json, char** svg_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TROPICA_H */

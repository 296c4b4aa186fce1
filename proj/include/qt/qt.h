#ifndef QT_QT_H
#define QT_QT_H

/* C interface to the quartic Thue toolkit. All integers cross the
 * boundary as decimal strings; results are opaque and carry both a JSON
 * and a plain-text rendering. */

#if defined(QT_BUILDING_LIBRARY)
#define QT_API __attribute__((visibility("default")))
#else
#define QT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qt_status {
    QT_OK = 0,
    QT_UNCERTIFIED = 2,    /* a result was produced but is not certified */
    QT_INVALID_INPUT = 3,
    QT_PRECISION_CAP = 4,  /* a comparison stayed undecided at the cap */
    QT_INTERNAL = 5        /* consistency check failed: a bug */
} qt_status;

typedef struct qt_context qt_context;
typedef struct qt_result qt_result;

QT_API const char* qt_version(void);
QT_API const char* qt_status_string(qt_status status);

/* Precision start 128 bits, cap 16384 or $QT_PRECISION_CAP, bound 10^4.
 * NULL when $QT_PRECISION_CAP is malformed. */
QT_API qt_context* qt_context_new(void);
QT_API void qt_context_free(qt_context* ctx);
QT_API qt_status qt_context_set_precision(qt_context* ctx, unsigned start_bits, unsigned cap_bits);
QT_API qt_status qt_context_set_search_bound(qt_context* ctx, const char* bound);
/* Message for the last failing call on ctx; "" after a success. */
QT_API const char* qt_context_last_error(const qt_context* ctx);

/* On QT_OK or QT_UNCERTIFIED *out may hold a result that the caller frees;
 * on any other status *out is NULL. */
QT_API qt_status qt_pell(qt_context* ctx, const char* d, qt_result** out);
QT_API qt_status qt_thue(qt_context* ctx, const char* t, qt_result** out);
QT_API qt_status qt_quartic(qt_context* ctx, const char* d, qt_result** out);
QT_API qt_status qt_quartic_range(qt_context* ctx, const char* lo, const char* hi, qt_result** out);
QT_API qt_status qt_approx(qt_context* ctx, const char* t, long r, int j, qt_result** out);
/* j in 0..3, or -1 for all four roots. */
QT_API qt_status qt_measure(qt_context* ctx, const char* t, int j, qt_result** out);
QT_API qt_status qt_verify(qt_context* ctx, const char* suite, qt_result** out);

QT_API const char* qt_result_json(const qt_result* res);
QT_API const char* qt_result_text(const qt_result* res);
QT_API int qt_result_certified(const qt_result* res);
QT_API void qt_result_free(qt_result* res);

#ifdef __cplusplus
}
#endif

#endif

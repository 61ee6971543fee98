#ifndef MSC_H
#define MSC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define MSC_API __attribute__((visibility("default")))
#else
#define MSC_API
#endif

typedef enum {
  MSC_OK = 0,
  MSC_ERR_DOMAIN = 1,           /* bad name, parameter out of range, closure bound */
  MSC_ERR_VERIFICATION = 2,     /* an exact check failed */
  MSC_ERR_INVALID_ARGUMENT = 3, /* null pointer or bad enum value */
  MSC_ERR_INTERNAL = 4
} msc_status;

typedef enum { MSC_FORMAT_TEXT = 0, MSC_FORMAT_JSON = 1, MSC_FORMAT_DOT = 2 } msc_format;
typedef enum { MSC_SIDE_RESTRICTION = 0, MSC_SIDE_INDUCTION = 1 } msc_side;

/* Pass for n when the family or pair takes no parameter. */
#define MSC_NO_PARAM (-1)

typedef struct msc_pair msc_pair;

MSC_API const char* msc_version(void);
/* Message of the last failed call on this thread; empty after a success. */
MSC_API const char* msc_last_error(void);
/* Every char* handed out by this library is released here. */
MSC_API void msc_string_free(char* s);

/* One pair name per line. */
MSC_API msc_status msc_pair_names(char** out);
MSC_API msc_status msc_pair_open(const char* name, int n, msc_pair** out);
MSC_API void msc_pair_free(msc_pair* p);
/* DOT renders the graph of dot_side; text and JSON show both sides. */
MSC_API msc_status msc_pair_render(const msc_pair* p, msc_format fmt, int unicode, msc_side dot_side, char** out);
/* ASCII label such as "A_5^(2)", or "unrecognized". */
MSC_API msc_status msc_pair_dynkin_type(const msc_pair* p, msc_side side, char** out);
MSC_API msc_status msc_pair_poincare(const msc_pair* p, msc_side side, size_t vertex, size_t terms, int closed_form,
                                     msc_format fmt, int unicode, char** out);

MSC_API msc_status msc_group(const char* family, int n, msc_format fmt, int unicode, char** out);
/* numeric != 0 computes the table from class sums instead of the closed form. */
MSC_API msc_status msc_chartable(const char* family, int n, int numeric, msc_format fmt, int unicode, char** out);
/* kind is 'T' or 'U'. */
MSC_API msc_status msc_chebyshev(char kind, unsigned n, msc_format fmt, int unicode, char** out);
MSC_API msc_status msc_exponents(const char* label, msc_format fmt, int unicode, char** out);

/* The report is written to *out even when a check fails; the status is then MSC_ERR_VERIFICATION. */
/* A family pair with n = MSC_NO_PARAM is verified for every n from its minimum to 8. */
MSC_API msc_status msc_verify_pair(const char* name, int n, msc_format fmt, int unicode, char** out);
MSC_API msc_status msc_verify_all(int max_n, msc_format fmt, int unicode, char** out);

#ifdef __cplusplus
}
#endif

#endif

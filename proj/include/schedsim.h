/* C API for the scheduling simulator shared library.
 *
 * All objects are opaque handles; every function returns an ss_status.
 * On failure ss_last_error() holds a human-readable message for the
 * calling thread. Strings returned through char** are owned by the
 * caller and released with ss_string_free().
 */
#ifndef SCHEDSIM_H
#define SCHEDSIM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ss_status {
    SS_OK = 0,
    SS_ERR_PARSE = 1,      /* malformed workload or policy text */
    SS_ERR_VALIDATE = 2,   /* workload violates an invariant */
    SS_ERR_POLICY = 3,     /* policy/workload mismatch (missing priorities) */
    SS_ERR_ORACLE = 4,     /* oracle precondition failed */
    SS_ERR_USAGE = 5,      /* bad argument (unknown format, null pointer) */
} ss_status;

typedef struct ss_workload ss_workload;
typedef struct ss_trace ss_trace;

const char* ss_status_name(ss_status status);
const char* ss_last_error(void);
void ss_string_free(char* s);

/* Workload text in the CSV format (header pid,arrival,burst[,priority]). */
ss_status ss_workload_parse(const char* text, ss_workload** out);
void ss_workload_free(ss_workload* w);
int ss_workload_size(const ss_workload* w);

/* policy: fcfs | sjf | rr:<quantum> | priority | priority:preemptive */
ss_status ss_simulate(const ss_workload* w, const char* policy,
                      long context_switch_ms, ss_trace** out);
void ss_trace_free(ss_trace* t);
long ss_trace_makespan(const ss_trace* t);

/* format: table | json | csv | gantt | svg */
ss_status ss_render_report(const ss_trace* t, const ss_workload* w,
                           const char* policy, const char* format, char** out);

/* policies: comma-separated list, at least two. format: table | json | csv */
ss_status ss_render_compare(const ss_workload* w, const char* policies,
                            long context_switch_ms, const char* format,
                            char** out);

/* Exhaustive check that SJF attains the minimum average waiting time.
 * Writes a small text report; *out_optimal is 1 when SJF is optimal. */
ss_status ss_verify_sjf(const ss_workload* w, char** out_report,
                        int* out_optimal);

#ifdef __cplusplus
}
#endif

#endif /* SCHEDSIM_H */

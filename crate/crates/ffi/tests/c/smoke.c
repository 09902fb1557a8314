#include <stdio.h>
#include <string.h>

#include "h2unknot.h"

int main(void) {
    H2uOptions opts = {.gamma = 2, .gamma_star = -1, .known_band_count = -1, .oracle = 0};
    H2uReport *report = NULL;
    if (h2u_analyze_pretzel(13, 4, 11, &opts, &report) != H2U_STATUS_OK) {
        fprintf(stderr, "analyze: %s\n", h2u_last_error());
        return 1;
    }
    uint64_t det = 0;
    H2uTheoremVerdict verdict;
    int64_t lower = 0, upper = 0;
    h2u_report_determinant(report, &det);
    h2u_report_theorem_verdict(report, &verdict);
    h2u_report_bounds(report, &lower, &upper);
    h2u_report_free(report);
    printf("det=%llu verdict=%d bounds=[%lld,%lld]\n", (unsigned long long)det, (int)verdict,
           (long long)lower, (long long)upper);
    if (det != 239 || verdict != H2U_THEOREM_VERDICT_OBSTRUCTED || lower != 2 || upper != 2) {
        return 1;
    }

    if (h2u_analyze_pretzel(3, 2, 2, NULL, &report) != H2U_STATUS_INVALID_INPUT) {
        return 1;
    }
    return strncmp(h2u_last_error(), "NotAKnot", 8) == 0 ? 0 : 1;
}

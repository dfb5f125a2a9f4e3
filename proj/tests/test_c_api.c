/* Exercises the shared library through its C header only. */

#include <stdio.h>
#include <string.h>

#include "purecheck/purecheck.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_suites(void) {
  pc_suite* suite = NULL;
  size_t n = 0;
  const char* name = NULL;
  const char* tags = NULL;
  pc_report* report = NULL;
  pc_summary summary;
  pc_entry entry;
  int code = -1;
  char* text = NULL;

  EXPECT(pc_suite_create(PC_SUITE_DEFAULT, &suite) == PC_OK);
  EXPECT(pc_suite_size(suite, &n) == PC_OK && n >= 20);
  EXPECT(pc_suite_entry_name(suite, 0, &name) == PC_OK);
  EXPECT(strcmp(name, "monoid.left_unit<list<int>>") == 0);
  EXPECT(pc_suite_entry_tags(suite, 0, &tags) == PC_OK && strcmp(tags, "monoid") == 0);
  EXPECT(pc_suite_entry_name(suite, n, &name) == PC_OUT_OF_RANGE);
  EXPECT(strlen(pc_last_error()) > 0);

  EXPECT(pc_suite_run(suite, 0, NULL, 1, &report) == PC_INVALID_ARGUMENT);
  EXPECT(report == NULL);
  EXPECT(pc_suite_run(suite, 50, "adequacy", 2, &report) == PC_OK);
  EXPECT(pc_report_size(report, &n) == PC_OK && n == 6);
  EXPECT(pc_report_summary(report, &summary) == PC_OK && summary.holds == 6);
  EXPECT(pc_report_exit_code(report, &code) == PC_OK && code == 0);
  EXPECT(pc_report_entry(report, 0, &entry) == PC_OK);
  EXPECT(strcmp(entry.name, "adequacy.semantics_sound") == 0);
  EXPECT(entry.outcome == PC_HOLDS && entry.samples == 50);
  EXPECT(pc_report_render(report, PC_FORMAT_JSON, &text) == PC_OK);
  EXPECT(text != NULL && strstr(text, "\"summary\"") != NULL);
  pc_string_free(text);
  pc_report_destroy(report);
  pc_suite_destroy(suite);

  EXPECT(pc_suite_create(PC_SUITE_EMPTY, &suite) == PC_OK);
  EXPECT(pc_suite_add_constant(suite, "yes", 1) == PC_OK);
  EXPECT(pc_suite_add_constant(suite, "no", 0) == PC_OK);
  EXPECT(pc_suite_add_constant(suite, "no", 1) == PC_CONFIG_ERROR);
  EXPECT(pc_suite_run(suite, 1, NULL, 0, &report) == PC_OK);
  EXPECT(pc_report_exit_code(report, &code) == PC_OK && code == 1);
  EXPECT(pc_report_entry(report, 1, &entry) == PC_OK && entry.outcome == PC_FALSIFIED);
  EXPECT(pc_report_render(report, PC_FORMAT_TEXT, &text) == PC_OK);
  EXPECT(strstr(text, "summary: 1 holds, 1 falsified") != NULL);
  pc_string_free(text);
  pc_report_destroy(report);
  pc_suite_destroy(suite);

  EXPECT(pc_suite_create(PC_SUITE_CONTROLS, &suite) == PC_OK);
  EXPECT(pc_suite_run(suite, 10, NULL, 1, &report) == PC_OK);
  EXPECT(pc_report_exit_code(report, &code) == PC_OK && code == 1);
  pc_report_destroy(report);
  pc_suite_destroy(suite);
}

static void test_words(void) {
  pc_word* x = NULL;
  pc_word* y = NULL;
  pc_word* bad = NULL;
  size_t n = 0;
  int defined = -1;
  int same = -1;
  char* text = NULL;

  EXPECT(pc_word_parse("+2:a\n-3:b\n", &x) == PC_OK);
  EXPECT(pc_word_parse("-2:b,+2:a", &y) == PC_OK);
  EXPECT(pc_word_size(x, &n) == PC_OK && n == 2);
  EXPECT(pc_word_render(x, &text) == PC_OK && strcmp(text, "+2:a,-3:b") == 0);
  pc_string_free(text);

  EXPECT(pc_word_apply(x, "abb", &defined, &text) == PC_OK);
  EXPECT(defined == 1 && strcmp(text, "aba") == 0);
  pc_string_free(text);
  EXPECT(pc_word_apply(x, "ab", &defined, &text) == PC_OK);
  EXPECT(defined == 0 && text == NULL);

  EXPECT(pc_word_equiv(x, y, &same) == PC_OK && same == 1);
  EXPECT(pc_brute_force_equiv(x, y, "ab", 6, &same) == PC_OK && same == 1);
  EXPECT(pc_brute_force_equiv(x, y, "", 6, &same) == PC_INVALID_ARGUMENT);
  EXPECT(pc_word_semantics(x, &text) == PC_OK);
  EXPECT(strcmp(text, "Try[Ins \"\"; Skip; Ins \"\"; Skip; Ins \"a\"; Del 'b'; Ins \"\"; Return]") == 0);
  pc_string_free(text);

  EXPECT(pc_word_parse("+2:", &bad) == PC_PARSE_ERROR);
  EXPECT(bad == NULL);
  EXPECT(strstr(pc_last_error(), "offset") != NULL);
  EXPECT(pc_word_parse("+2000000000:a", &bad) == PC_OK);
  EXPECT(pc_word_semantics(bad, &text) == PC_OUT_OF_RANGE);
  pc_word_destroy(bad);

  pc_word_destroy(x);
  pc_word_destroy(y);
}

static void test_errors(void) {
  size_t n = 0;
  EXPECT(pc_suite_size(NULL, &n) == PC_NULL_ARGUMENT);
  EXPECT(pc_suite_create(PC_SUITE_DEFAULT, NULL) == PC_NULL_ARGUMENT);
  EXPECT(pc_word_parse(NULL, NULL) == PC_NULL_ARGUMENT);
  EXPECT(strcmp(pc_status_string(PC_PARSE_ERROR), "parse error") == 0);
  EXPECT(strlen(pc_version()) > 0);
  pc_suite_destroy(NULL);
  pc_report_destroy(NULL);
  pc_word_destroy(NULL);
  pc_string_free(NULL);
}

int main(void) {
  test_suites();
  test_words();
  test_errors();
  if (failures == 0) printf("c api: all checks passed\n");
  return failures == 0 ? 0 : 1;
}

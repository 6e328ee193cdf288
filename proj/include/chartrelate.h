/* chartrelate — C API for chart relation extraction.
 *
 * All functions return CHR_OK (0) on success or a chr_status error code;
 * chr_last_error() describes the most recent failure on the calling
 * thread. Objects returned through out-parameters are owned by the caller
 * and released with the matching chr_*_free function.
 */
#ifndef CHARTRELATE_H
#define CHARTRELATE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CHR_API __declspec(dllexport)
#else
#define CHR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chr_status {
    CHR_OK = 0,
    CHR_ERR_IO = 1,
    CHR_ERR_NOT_FOUND = 2,
    CHR_ERR_DECODE = 3,
    CHR_ERR_INVALID_PARAMS = 4,
    CHR_ERR_DEGENERATE_SERIES = 5,
    CHR_ERR_TOO_FEW_PIXELS = 6,
    CHR_ERR_CURVE_TOO_SHORT = 7,
    CHR_ERR_NO_CLUSTERS = 8,
    CHR_ERR_EMPTY_MASK = 9,
    CHR_ERR_SEGMENTATION_EMPTY = 10,
    CHR_ERR_NO_LEGEND = 11,
    CHR_ERR_UNASSIGNABLE_ENTRY = 12,
    CHR_ERR_LAYOUT = 13,
    CHR_ERR_EMPTY_CORPUS = 14,
    CHR_ERR_OUT_OF_RANGE = 15,
    CHR_ERR_UNKNOWN = 127
} chr_status;

typedef enum chr_relation {
    CHR_REL_NEGATIVE = -1,
    CHR_REL_NEUTRAL = 0,
    CHR_REL_POSITIVE = 1
} chr_relation;

typedef struct chr_config chr_config;
typedef struct chr_image chr_image;
typedef struct chr_mask_set chr_mask_set;

typedef struct chr_k_selection {
    int chosen_k;
    int kneedle_k;
    int bumped;
    double normalized_errors[8];
    int curve_len;
} chr_k_selection;

CHR_API const char* chr_version(void);
CHR_API const char* chr_status_name(chr_status status);

/* Message for the last failing call on this thread; empty string if none. */
CHR_API const char* chr_last_error(void);

/* Strings returned through char** out-parameters. */
CHR_API void chr_string_free(char* s);

/* ---- configuration ---------------------------------------------------- */

CHR_API chr_status chr_config_new(chr_config** out);
CHR_API void chr_config_free(chr_config* cfg);
/* Same keys as the config file (e.g. "saturation_threshold", "seed"). */
CHR_API chr_status chr_config_set(chr_config* cfg, const char* key,
                                  const char* value);
CHR_API chr_status chr_config_load_file(chr_config* cfg, const char* path);
CHR_API chr_status chr_config_to_json(const chr_config* cfg, char** out_json);

/* ---- images ------------------------------------------------------------ */

CHR_API chr_status chr_image_load(const char* path, chr_image** out);
CHR_API chr_status chr_image_from_pixels(int width, int height,
                                         const uint8_t* rgb, chr_image** out);
CHR_API chr_status chr_image_save(const chr_image* img, const char* path);
CHR_API int chr_image_width(const chr_image* img);
CHR_API int chr_image_height(const chr_image* img);
/* Borrowed pointer to row-major RGB8 data, 3 bytes per pixel. */
CHR_API const uint8_t* chr_image_pixels(const chr_image* img);
CHR_API void chr_image_free(chr_image* img);

/* ---- pipeline stages --------------------------------------------------- */

CHR_API chr_status chr_preprocess(const chr_image* img, const chr_config* cfg,
                                  chr_image** out);

CHR_API chr_status chr_select_k(const chr_image* img, const chr_config* cfg,
                                chr_k_selection* out);

CHR_API chr_status chr_segment(const chr_image* img, int k,
                               const chr_config* cfg, chr_mask_set** out);
CHR_API size_t chr_mask_set_count(const chr_mask_set* masks);
CHR_API size_t chr_mask_set_pixel_count(const chr_mask_set* masks, size_t i);
CHR_API chr_status chr_mask_set_color(const chr_mask_set* masks, size_t i,
                                      uint8_t rgb_out[3]);
/* Mask i as an image: member pixels in the representative color on white. */
CHR_API chr_status chr_mask_set_render(const chr_mask_set* masks, size_t i,
                                       chr_image** out);
CHR_API void chr_mask_set_free(chr_mask_set* masks);

/* Full extraction on an image file. truth_json_path supplies facet boxes
 * and text (may be NULL: facets degrade to absent). Result is the
 * extraction JSON document. */
CHR_API chr_status chr_extract_file(const char* image_path,
                                    const char* truth_json_path,
                                    const chr_config* cfg, char** out_json);

/* ---- generation and evaluation ----------------------------------------- */

CHR_API chr_status chr_generate_corpus(const chr_config* cfg,
                                       const char* out_dir, int count,
                                       char** out_manifest_json);

CHR_API chr_status chr_evaluate(const char* manifest_path,
                                const char* results_dir, const chr_config* cfg,
                                char** out_report_json);

CHR_API chr_status chr_ablate_k(const char* manifest_path,
                                const chr_config* cfg, char** out_report_json);

/* limit == 0 evaluates the whole corpus. */
CHR_API chr_status chr_ablate_seg(const char* manifest_path,
                                  const chr_config* cfg, size_t limit,
                                  char** out_report_json);

/* ---- small numeric helpers --------------------------------------------- */

CHR_API chr_status chr_spearman(const double* xs, const double* ys, size_t n,
                                double* out_rho);
CHR_API chr_status chr_classify_correlation(double rho, double threshold,
                                            chr_relation* out);
CHR_API chr_status chr_edit_distance(const char* a, const char* b,
                                     size_t* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHARTRELATE_H */

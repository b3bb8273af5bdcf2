#include "hylab/hylab.h"

#include <cmath>
#include <cstring>
#include <string>

#include "hylab/campaign.hpp"
#include "hylab/error.hpp"
#include "hylab/inequalities.hpp"
#include "hylab/random.hpp"

struct hylab_group {
  hylab::FiniteAbelianGroup group;
};
struct hylab_field {
  hylab::OperatorField field;
};
struct hylab_weight {
  hylab::PositiveMatrix matrix;
};

namespace {

thread_local std::string last_error;

template <class F>
hylab_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return HYLAB_OK;
  } catch (const hylab::ValidationError& e) {
    last_error = e.what();
    return HYLAB_ERR_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return HYLAB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HYLAB_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HYLAB_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw hylab::ValidationError(std::string("null pointer: ") + what);
}

hylab::ComplexMatrix read_matrix(const double* data, std::size_t dim) {
  need(data, "matrix");
  hylab::require(dim >= 1, "matrix dimension must be >= 1");
  const auto d = static_cast<Eigen::Index>(dim);
  hylab::ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d * d; ++i) m.data()[i] = {data[2 * i], data[2 * i + 1]};
  return m;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void fill(const hylab::InequalityReport& r, hylab_report* out) {
  std::memset(out, 0, sizeof(*out));
  std::strncpy(out->name, r.name.c_str(), sizeof(out->name) - 1);
  out->p = r.p;
  out->q = r.q;
  out->lhs = r.lhs;
  out->rhs = r.rhs;
  out->constant = r.constant;
  out->ratio = r.ratio;
  out->margin = r.margin;
  out->pass = r.pass ? 1 : 0;
}

}  // namespace

extern "C" {

const char* hylab_version(void) { return "0.1.0"; }

const char* hylab_last_error(void) { return last_error.c_str(); }

void hylab_string_free(char* s) { std::free(s); }

hylab_status hylab_group_create(const int64_t* factors, size_t count, double haar_weight, hylab_group** out) {
  if (!out || (!factors && count)) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    *out = new hylab_group{hylab::make_group(std::vector<std::int64_t>(factors, factors + count), haar_weight)};
  });
}

hylab_status hylab_group_parse(const char* spec, hylab_group** out) {
  if (!spec || !out) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { *out = new hylab_group{hylab::parse_group_spec(spec)}; });
}

hylab_status hylab_group_padic(int64_t prime, int depth_neg, int depth_pos, hylab_group** out) {
  if (!out) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { *out = new hylab_group{hylab::make_padic(prime, depth_neg, depth_pos).group()}; });
}

hylab_status hylab_group_grid(int dimension, int64_t points_per_axis, double cell_width, hylab_group** out) {
  if (!out) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { *out = new hylab_group{hylab::make_grid(dimension, points_per_axis, cell_width).group()}; });
}

void hylab_group_free(hylab_group* group) { delete group; }

hylab_status hylab_group_order(const hylab_group* group, size_t* order) {
  if (!group || !order) return HYLAB_ERR_NULL_POINTER;
  *order = group->group.order();
  return HYLAB_OK;
}

hylab_status hylab_group_weights(const hylab_group* group, double* haar_weight, double* dual_weight) {
  if (!group) return HYLAB_ERR_NULL_POINTER;
  if (haar_weight) *haar_weight = group->group.haar_weight();
  if (dual_weight) *dual_weight = group->group.dual_weight();
  return HYLAB_OK;
}

hylab_status hylab_char_eval(const hylab_group* group, size_t character_index, size_t element_index, double* re,
                             double* im) {
  if (!group || !re || !im) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    const auto& g = group->group;
    const auto v = hylab::char_eval(g, g.character_at(character_index), g.element_at(element_index));
    *re = v.real();
    *im = v.imag();
  });
}

hylab_status hylab_inversion_defect(const hylab_group* group, const double* values, double* defect) {
  if (!group || !values || !defect) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    std::vector<hylab::Complex> f(group->group.order());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = {values[2 * i], values[2 * i + 1]};
    *defect = hylab::inversion_defect(group->group, f);
  });
}

hylab_status hylab_field_create(const hylab_group* group, size_t dim, const double* values, hylab_field** out) {
  if (!group || !values || !out) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    hylab::require(dim >= 1, "field dimension must be >= 1");
    const std::size_t stride = 2 * dim * dim;
    std::vector<hylab::ComplexMatrix> mats;
    for (std::size_t e = 0; e < group->group.order(); ++e) mats.push_back(read_matrix(values + e * stride, dim));
    *out = new hylab_field{hylab::OperatorField(group->group, static_cast<Eigen::Index>(dim), std::move(mats))};
  });
}

hylab_status hylab_field_random(const hylab_group* group, size_t dim, uint64_t seed, hylab_field** out) {
  if (!group || !out) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    hylab::require(dim >= 1, "field dimension must be >= 1");
    hylab::Rng rng(seed);
    *out = new hylab_field{hylab::random_field(group->group, static_cast<Eigen::Index>(dim), rng)};
  });
}

void hylab_field_free(hylab_field* field) { delete field; }

hylab_status hylab_fourier_transform(const hylab_field* field, int fast, double* out, size_t out_len) {
  if (!field || !out) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    const auto& f = field->field;
    const auto dd = static_cast<std::size_t>(f.dim() * f.dim());
    hylab::require(out_len >= 2 * dd * f.size(), "output buffer too small");
    const auto dual = fast ? hylab::fourier_transform_fast(f) : hylab::fourier_transform(f);
    for (std::size_t e = 0; e < dual.size(); ++e)
      for (std::size_t i = 0; i < dd; ++i) {
        out[2 * (e * dd + i)] = dual[e].data()[i].real();
        out[2 * (e * dd + i) + 1] = dual[e].data()[i].imag();
      }
  });
}

hylab_status hylab_parseval_defect(const hylab_field* field, double* relative_defect) {
  if (!field || !relative_defect) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { *relative_defect = hylab::parseval_defect(field->field).relative; });
}

hylab_status hylab_bochner_linearity_defect(const hylab_field* field, hylab_probe_kind kind, const double* matrix,
                                            size_t row, size_t col, double* defect) {
  if (!field || !defect) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    const auto d = field->field.dim();
    const auto dim = static_cast<std::size_t>(d);
    const hylab::ComplexMatrix id = hylab::ComplexMatrix::Identity(d, d);
    hylab::LinearProbe probe;
    switch (kind) {
      case HYLAB_PROBE_TRACE: probe = hylab::TraceProbe{}; break;
      case HYLAB_PROBE_ENTRY:
        probe = hylab::EntryProbe{static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)};
        break;
      case HYLAB_PROBE_LEFT: probe = hylab::SandwichProbe{read_matrix(matrix, dim), id}; break;
      case HYLAB_PROBE_RIGHT: probe = hylab::SandwichProbe{id, read_matrix(matrix, dim)}; break;
      case HYLAB_PROBE_SANDWICH: {
        const auto m = read_matrix(matrix, dim);
        probe = hylab::SandwichProbe{m, m};
        break;
      }
      default: throw hylab::ValidationError("unsupported linear probe");
    }
    *defect = hylab::bochner_linearity_defect(field->field, probe);
  });
}

hylab_status hylab_weight_create(const double* matrix, size_t dim, hylab_weight** out) {
  if (!matrix || !out) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { *out = new hylab_weight{hylab::PositiveMatrix(read_matrix(matrix, dim))}; });
}

void hylab_weight_free(hylab_weight* weight) { delete weight; }

hylab_status hylab_schatten_norm(const double* matrix, size_t dim, double p, double* norm) {
  if (!matrix || !norm) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { *norm = hylab::schatten_norm(read_matrix(matrix, dim), p); });
}

hylab_status hylab_singular_values(const double* matrix, size_t dim, double* values) {
  if (!matrix || !values) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    const auto s = hylab::singular_values(read_matrix(matrix, dim));
    for (Eigen::Index i = 0; i < s.size(); ++i) values[i] = s[i];
  });
}

hylab_status hylab_check_main(const hylab_field* field, double p, hylab_report* report) {
  if (!field || !report) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { fill(hylab::check_main(field->field, p), report); });
}

hylab_status hylab_check_main_sup(const hylab_field* field, hylab_report* report) {
  if (!field || !report) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { fill(hylab::check_main_sup(field->field), report); });
}

hylab_status hylab_check_weighted(const hylab_field* field, double p, const hylab_weight* a, const hylab_weight* b,
                                  double t, hylab_weight_direction direction, hylab_report* report) {
  if (!field || !a || !b || !report) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    hylab::require(direction == HYLAB_A_TO_GAMMA || direction == HYLAB_GAMMA_TO_A, "unknown weight direction");
    const auto dir = direction == HYLAB_A_TO_GAMMA ? hylab::WeightDirection::AToGamma : hylab::WeightDirection::GammaToA;
    fill(hylab::check_weighted(field->field, p, a->matrix, b->matrix, t, dir), report);
  });
}

hylab_status hylab_check_clarkson(const double* a, const double* b, size_t dim, double p, const char* variant,
                                  hylab_report* report) {
  if (!a || !b || !variant || !report) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    fill(hylab::check_clarkson(read_matrix(a, dim), read_matrix(b, dim), p, hylab::clarkson_variant_from_string(variant)),
         report);
  });
}

hylab_status hylab_check_bhatia_kittaneh(const double* matrices, size_t count, size_t dim, double p,
                                         hylab_report* report) {
  if (!matrices || !report) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    std::vector<hylab::ComplexMatrix> tuple;
    for (std::size_t i = 0; i < count; ++i) tuple.push_back(read_matrix(matrices + i * 2 * dim * dim, dim));
    fill(hylab::check_bhatia_kittaneh(tuple, p), report);
  });
}

hylab_status hylab_run(const char* command, const char* config_json, char** report_json, int* all_pass) {
  if (!command || !config_json || !report_json || !all_pass) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] {
    const auto config = nlohmann::json::parse(config_json);
    const auto out = hylab::run_command(command, config);
    *report_json = dup_string(out.document.dump(2));
    *all_pass = out.all_pass() ? 1 : 0;
  });
}

hylab_status hylab_report_to_csv(const char* report_json, char** csv) {
  if (!report_json || !csv) return HYLAB_ERR_NULL_POINTER;
  return guarded([&] { *csv = dup_string(hylab::reports_to_csv(nlohmann::json::parse(report_json))); });
}

}  // extern "C"

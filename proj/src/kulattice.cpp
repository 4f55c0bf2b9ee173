#include "chern/kulattice.hpp"

#include <algorithm>

namespace chern {

std::vector<std::size_t> HNFMatrix::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& row : rows) {
    auto it = std::find_if(row.begin(), row.end(), [](const ExactInt& x) { return x != 0; });
    out.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  return out;
}

namespace {

// Echelon basis indexed by pivot column, built one row at a time.
class EchelonBuilder {
 public:
  EchelonBuilder(std::size_t columns, std::size_t generators, bool track)
      : columns_(columns), generators_(generators), track_(track), rows_(columns), transforms_(columns) {}

  void insert(IntRow r, std::size_t origin) {
    if (r.size() != columns_) throw PreconditionError("hnf: rows must share one width");
    IntRow t;
    if (track_) {
      t.assign(generators_, 0);
      t[origin] = 1;
    }
    for (std::size_t c = 0; c < columns_; ++c) {
      if (r[c] == 0) continue;
      if (!rows_[c]) {
        if (r[c] < 0) {
          negate(r);
          negate(t);
        }
        rows_[c] = std::move(r);
        transforms_[c] = std::move(t);
        reduce();
        return;
      }
      IntRow& b = *rows_[c];
      IntRow& bt = transforms_[c];
      ExactInt g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), b[c].get_mpz_t(), r[c].get_mpz_t());
      const ExactInt bq = b[c] / g, rq = r[c] / g;
      combine(b, r, x, y, bq, rq);
      if (track_) combine(bt, t, x, y, bq, rq);
    }
    // r reduced to zero: a relation among the generators, nothing to keep.
    reduce();
  }

  HNFCertificate finish() && {
    HNFCertificate out;
    out.form.columns = columns_;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (!rows_[c]) continue;
      out.form.rows.push_back(std::move(*rows_[c]));
      if (track_) out.transform.push_back(std::move(transforms_[c]));
    }
    return out;
  }

 private:
  static void negate(IntRow& v) {
    for (auto& x : v) x = -x;
  }

  // (b, r) <- (x b + y r, bq r - rq b); the pivot of b becomes gcd > 0 and r[c] becomes 0.
  static void combine(IntRow& b, IntRow& r, const ExactInt& x, const ExactInt& y, const ExactInt& bq,
                      const ExactInt& rq) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      ExactInt nb = x * b[i] + y * r[i];
      r[i] = bq * r[i] - rq * b[i];
      b[i] = std::move(nb);
    }
  }

  static void subtract_multiple(IntRow& v, const ExactInt& q, const IntRow& w) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= q * w[i];
  }

  void reduce() {
    for (std::size_t c = 0; c < columns_; ++c) {
      if (!rows_[c]) continue;
      const IntRow& p = *rows_[c];
      for (std::size_t above = 0; above < c; ++above) {
        if (!rows_[above]) continue;
        IntRow& a = *rows_[above];
        ExactInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[c].get_mpz_t(), p[c].get_mpz_t());
        if (q == 0) continue;
        subtract_multiple(a, q, p);
        if (track_) subtract_multiple(transforms_[above], q, transforms_[c]);
      }
    }
  }

  std::size_t columns_;
  std::size_t generators_;
  bool track_;
  std::vector<std::optional<IntRow>> rows_;
  std::vector<IntRow> transforms_;
};

HNFCertificate run_hnf(std::span<const IntRow> rows, bool track) {
  if (rows.empty()) return {};
  EchelonBuilder builder(rows.front().size(), rows.size(), track);
  for (std::size_t i = 0; i < rows.size(); ++i) builder.insert(rows[i], i);
  return std::move(builder).finish();
}

IntRow as_row(const ChernData& d) { return {d.rank, d.c2, d.c3}; }

}  // namespace

HNFMatrix hnf(std::span<const IntRow> rows) { return run_hnf(rows, false).form; }

HNFCertificate hnf_with_transform(std::span<const IntRow> rows) { return run_hnf(rows, true); }

bool in_row_lattice(const HNFMatrix& h, const IntRow& v) {
  if (h.empty()) return std::all_of(v.begin(), v.end(), [](const ExactInt& x) { return x == 0; });
  if (v.size() != h.columns) throw PreconditionError("in_row_lattice: width mismatch");
  IntRow rest = v;
  const auto piv = h.pivots();
  std::size_t next = 0;
  for (std::size_t c = 0; c < rest.size(); ++c) {
    while (next < piv.size() && piv[next] < c) ++next;
    if (rest[c] == 0) continue;
    if (next == piv.size() || piv[next] != c) return false;
    const IntRow& row = h.rows[next];
    if (!mpz_divisible_p(rest[c].get_mpz_t(), row[c].get_mpz_t())) return false;
    const ExactInt q = rest[c] / row[c];
    for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= q * row[i];
  }
  return true;
}

void ChernLattice::add(VirtualRep rep, ChernData data) {
  provenance.push_back(std::move(rep));
  rows.push_back(std::move(data));
}

ChernLattice build_lattice(const BasisEvaluation& eval) {
  ChernLattice lat;
  for (std::size_t i = 0; i < eval.basis.size(); ++i) lat.add(VirtualRep::of(eval.basis[i]), eval.values[i]);
  lat.add(VirtualRep::power_sum(eval.params.ell()), eval.power_sum);
  return lat;
}

ChernLattice build_lattice(const GroupParams& params, long max_size) {
  return build_lattice(evaluate_basis(params, max_size));
}

ExactInt constrained_c3_subgroup(const ChernLattice& lat) {
  const ChernData trivial{1, 0, 0};
  if (std::find(lat.rows.begin(), lat.rows.end(), trivial) == lat.rows.end())
    throw PreconditionError("lattice must contain the trivial representation");
  std::vector<IntRow> rows;
  rows.reserve(lat.rows.size());
  for (const auto& d : lat.rows) rows.push_back(as_row(d));
  const HNFMatrix h = hnf(rows);
  const auto piv = h.pivots();
  for (std::size_t i = 0; i < piv.size(); ++i)
    if (piv[i] == 2) return h.rows[i][2];
  return 0;
}

namespace {

ExactInt halve_checked(const ExactInt& d) {
  if (!mpz_even_p(d.get_mpz_t()))
    throw InvariantViolation("C3 over rank 0, C2 = 0 virtual representations generates " + d.get_str() +
                             "Z, which is not even");
  return d / 2;
}

std::string subgroup_name(const ExactInt& g) {
  if (g == 1) return "Z";
  if (g == 0) return "0";
  return g.get_str() + "Z";
}

}  // namespace

ExactInt ku6_from_lattice(const ChernLattice& lat) { return halve_checked(constrained_c3_subgroup(lat)); }

ExactInt ku6_image_index(const GroupParams& params, long max_size) {
  if (max_size < 2) throw PreconditionError("ku6_image_index needs max_size >= 2");
  return ku6_from_lattice(build_lattice(params, max_size));
}

std::optional<ExactInt> expected_ku6_generator(const GroupParams& params) {
  if (params.ell() == 2 && params.k() == 3) return ExactInt(1);
  return std::nullopt;
}

KuReport ku_report(const GroupParams& params, long max_size) {
  if (max_size < 2) throw PreconditionError("ku needs max_size >= 2");
  const BasisEvaluation eval = evaluate_basis(params, max_size);
  const ChernLattice lat = build_lattice(eval);
  const ExactInt d = constrained_c3_subgroup(lat);

  KuReport report{params, max_size, d, halve_checked(d), std::nullopt, {}, false,
                  expected_ku6_generator(params), {}};
  if (max_size >= 3) report.chow3_generator = chow_index(eval, 3).image_generator;

  // Short witnesses: cancel C2 of each generator against p_ell, then fix the rank.
  const VirtualRep p_rep = lat.provenance.back();
  const ChernData& p = lat.rows.back();
  ExactInt reached = 0;
  for (std::size_t i = 0; i + 1 < lat.rows.size(); ++i) {
    const ChernData& r = lat.rows[i];
    VirtualRep rep;
    ChernData data;
    if (r.c2 == 0) {
      rep = lat.provenance[i];
      data = r;
    } else {
      const ExactInt g = gcd(r.c2, p.c2);
      const ExactInt a = r.c2 / g, b = p.c2 / g;
      rep = a * p_rep - b * lat.provenance[i];
      data = a * p - b * r;
    }
    const ExactInt rank = data.rank;
    rep.add_trivial(-rank);
    data.rank = 0;
    if (data.c3 == 0) continue;
    reached = gcd(reached, data.c3);
    if (report.witnesses.size() < kMaxListedWitnesses)
      report.witnesses.push_back({std::move(rep), data, padic_valuation(params.prime(), data.c3)});
  }
  report.witnesses_generate = reached == d;

  report.chain = (report.chow3_generator ? "imCh3=" + subgroup_name(*report.chow3_generator) + ", " : "") +
                 "imKu6=" + subgroup_name(report.ku6_generator);
  return report;
}

}  // namespace chern

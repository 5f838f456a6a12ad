#ifndef QDISK_IO_HPP
#define QDISK_IO_HPP

#include <iosfwd>

#include "qdisk/deformation.hpp"
#include "qdisk/free_series.hpp"
#include "qdisk/quantum.hpp"

namespace qdisk {

// Line formats (one term per line, canonical graded-lex order on output):
//   freeseries n=<n> cap=<D>            then  "<coeff> [1,2]"
//   qseries n=<n> cap=<D> q=<scalar>    then  "<coeff> (2,1)"
//   defoseries n=<n> cap=<D> zwin=<P>   then  "<coeff> (2,1) p=<int>"
// Coefficients accept both "a/b+c/d*i" and "(re,im)" syntax.

enum class SeriesKind { free_series, q_series, defo_series };

struct ParsedQSeries {
  QSeries<ExactComplex> series;
  ExactComplex q;
};

SeriesKind peek_kind(std::istream& in);

FreeSeries<ExactComplex> parse_free_series(std::istream& in);
ParsedQSeries parse_q_series(std::istream& in);
DefoSeries<ExactComplex> parse_defo_series(std::istream& in);

FreeSeries<ExactComplex> load_free_series(const std::string& path);
ParsedQSeries load_q_series(const std::string& path);
DefoSeries<ExactComplex> load_defo_series(const std::string& path);

std::string serialize(const FreeSeries<ExactComplex>& f);
std::string serialize(const QSeries<ExactComplex>& f, const ExactComplex& q);
std::string serialize(const DefoSeries<ExactComplex>& f);

} // namespace qdisk

#endif

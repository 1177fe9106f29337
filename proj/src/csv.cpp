#include <array>
#include <charconv>
#include <fstream>
#include <string>

#include "mjue/errors.hpp"
#include "mjue/harness.hpp"

namespace mjue {
namespace {

void write_file(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

std::string format_number(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw IoError("format_number: conversion failed");
  return std::string(buf.data(), ptr);
}

std::string to_csv(const ConvergenceReport& report) {
  std::string s = report.study == StudyKind::density ? "n,max_err,target\n"
                                                     : "n,max_err,fit_err,target\n";
  for (const auto& row : report.samples) {
    s += std::to_string(row.n) + ',' + format_number(row.max_err) + ',';
    if (report.study != StudyKind::density) s += format_number(row.fit_err) + ',';
    s += format_number(row.target) + '\n';
  }
  return s;
}

std::string to_csv(const GapReport& report) {
  std::string s = "s,n,P_finite,P_limit,abs_diff\n";
  for (const auto& r : report.rows) {
    s += format_number(r.s) + ',' + std::to_string(r.n) + ',' + format_number(r.p_finite) + ',' +
         format_number(r.p_limit) + ',' + format_number(r.abs_diff) + '\n';
  }
  return s;
}

std::string to_csv(const AsymptoticsReport& report) {
  std::string s = "n,bulk_err,edge_err\n";
  for (const auto& r : report.rows) {
    s += std::to_string(r.n) + ',' + format_number(r.bulk_err) + ',' + format_number(r.edge_err) +
         '\n';
  }
  return s;
}

std::string to_csv(const RecurrenceTable& table) {
  std::string s = "k,a,b\n";
  for (int k = 0; k < table.N; ++k) {
    s += std::to_string(k) + ',' + format_number(table.a[k]) + ',' + format_number(table.b[k]) +
         '\n';
  }
  return s;
}

void emit_csv(const ConvergenceReport& report, const std::string& path) {
  write_file(to_csv(report), path);
}
void emit_csv(const GapReport& report, const std::string& path) { write_file(to_csv(report), path); }
void emit_csv(const AsymptoticsReport& report, const std::string& path) {
  write_file(to_csv(report), path);
}
void emit_csv(const RecurrenceTable& table, const std::string& path) {
  write_file(to_csv(table), path);
}

}  // namespace mjue

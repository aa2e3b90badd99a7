#include <doctest.h>

#include "mlq/table_io.hpp"
#include "mlq/verify.hpp"

using mlq::TextTable;

TEST_CASE("csv and json table round trips") {
  TextTable table;
  table.title = "demo";
  table.columns = {"s", "n", "value"};
  table.add_row({"1", "3", "3"});
  table.add_row({"2", "4", "40"});
  table.add_row({"2", "5", "7/10"});

  TextTable from_csv = mlq::parse_csv(mlq::render_csv(table));
  CHECK(from_csv.columns == table.columns);
  CHECK(from_csv.rows == table.rows);

  TextTable from_json = mlq::parse_json_table(mlq::render_json(table));
  CHECK(from_json.title == table.title);
  CHECK(from_json.columns == table.columns);
  CHECK(from_json.rows == table.rows);

  // rationals survive bit-exactly
  CHECK(mlq::Rational::from_string(from_csv.rows[2][2]) ==
        mlq::Rational(mlq::BigInt(7), mlq::BigInt(10)));
}

TEST_CASE("plain rendering aligns columns") {
  TextTable table;
  table.columns = {"a", "bb"};
  table.add_row({"123", "4"});
  std::string out = mlq::render_plain(table);
  CHECK(out.find("a    bb") != std::string::npos);
  CHECK(out.find("123  4") != std::string::npos);
}

TEST_CASE("verification suites pass at a small budget") {
  mlq::verify::Budget budget;
  budget.max_N = 10;
  budget.workers = 1;
  auto report = mlq::verify::run_all(budget);
  for (const auto& check : report.checks) {
    INFO(check.name, ": ", check.detail);
    if (check.kind != mlq::verify::CheckKind::kAdvisory) CHECK(check.pass);
  }
  CHECK(report.ok());
  CHECK(report.conjecture_disagreements() == 0);
  // the printed-variant advisories are expected to differ
  bool saw_statement_advisory = false;
  for (const auto& check : report.checks)
    if (check.name == "thm:gamma_triple_sum[statement]") {
      saw_statement_advisory = check.kind == mlq::verify::CheckKind::kAdvisory;
      CHECK_FALSE(check.pass);
    }
  CHECK(saw_statement_advisory);
}

TEST_CASE("a corrupted closed form is caught with a counterexample") {
  mlq::verify::Budget budget;
  budget.max_N = 9;
  budget.workers = 1;
  mlq::verify::FormulaSet broken;
  broken.n13 = [](long long s, long long t, long long n) {
    return mlq::formulas::n13_closed(s, t, n) + mlq::BigInt(1);
  };
  auto report = mlq::verify::run_theorems(budget, broken);
  CHECK_FALSE(report.ok());
  bool found = false;
  for (const auto& check : report.checks)
    if (!check.pass && check.kind == mlq::verify::CheckKind::kTheorem &&
        check.name.find("n13") != std::string::npos) {
      found = true;
      CHECK(check.detail.find("n13") != std::string::npos);
    }
  CHECK(found);
}

"""Run the verification suites and print their reports."""

from annulet.harness import Budgets, run_suite

budgets = Budgets(effort=50, width=28, seed=0)
for suite in ("homology", "star_m", "duality", "trace0"):
    rep = run_suite(suite, "nine42", budgets)
    print(rep.to_markdown())
